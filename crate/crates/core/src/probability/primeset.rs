use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GroupError, Result};
use crate::primes::is_prime;

/// A set of primes: all of them, the odd ones (`2'`), `{p}`, `p'`, or an
/// explicit finite list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PrimeSet {
    All,
    Odd,
    Single(u64),
    Complement(u64),
    Explicit(BTreeSet<u64>),
}

impl PrimeSet {
    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::All => true,
            PrimeSet::Odd => p != 2,
            PrimeSet::Single(q) => p == *q,
            PrimeSet::Complement(q) => p != *q,
            PrimeSet::Explicit(set) => set.contains(&p),
        }
    }

    /// Accepts `*`, `all`, `odd`, `2`, `2'`, `{2,3}`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let prime = |x: &str| -> Result<u64> {
            let p: u64 = x
                .parse()
                .map_err(|_| GroupError::Parse(format!("bad prime set `{s}`")))?;
            if !is_prime(p) {
                return Err(GroupError::Parse(format!("{p} is not a prime")));
            }
            Ok(p)
        };
        match t.as_str() {
            "*" | "all" => return Ok(PrimeSet::All),
            "odd" => return Ok(PrimeSet::Odd),
            _ => {}
        }
        if let Some(body) = t.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
            let set = if body.is_empty() {
                BTreeSet::new()
            } else {
                body.split(',').map(prime).collect::<Result<BTreeSet<_>>>()?
            };
            return Ok(PrimeSet::Explicit(set));
        }
        if let Some(p) = t.strip_suffix('\'').or_else(|| t.strip_suffix('′')) {
            let p = prime(p)?;
            return Ok(if p == 2 { PrimeSet::Odd } else { PrimeSet::Complement(p) });
        }
        Ok(PrimeSet::Single(prime(&t)?))
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSet::All => f.write_str("*"),
            PrimeSet::Odd => f.write_str("2'"),
            PrimeSet::Single(p) => write!(f, "{p}"),
            PrimeSet::Complement(p) => write!(f, "{p}'"),
            PrimeSet::Explicit(set) => {
                let items: Vec<String> = set.iter().map(|p| p.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))
            }
        }
    }
}

impl FromStr for PrimeSet {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self> {
        PrimeSet::parse(s)
    }
}

impl Serialize for PrimeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PrimeSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        PrimeSet::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(PrimeSet::parse("*").unwrap(), PrimeSet::All);
        assert_eq!(PrimeSet::parse("2'").unwrap(), PrimeSet::Odd);
        assert_eq!(PrimeSet::parse("odd").unwrap(), PrimeSet::Odd);
        assert_eq!(PrimeSet::parse("5'").unwrap(), PrimeSet::Complement(5));
        assert_eq!(PrimeSet::parse("2").unwrap(), PrimeSet::Single(2));
        assert_eq!(
            PrimeSet::parse("{2, 3}").unwrap(),
            PrimeSet::Explicit([2, 3].into_iter().collect())
        );
        assert!(PrimeSet::parse("4").is_err());
        assert!(PrimeSet::parse("{2,x}").is_err());
        for s in ["*", "2'", "7", "5'", "{2,3}"] {
            assert_eq!(PrimeSet::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn membership() {
        assert!(PrimeSet::All.contains(97));
        assert!(!PrimeSet::Odd.contains(2) && PrimeSet::Odd.contains(3));
        assert!(!PrimeSet::Complement(5).contains(5) && PrimeSet::Complement(5).contains(2));
        assert!(PrimeSet::Single(3).contains(3) && !PrimeSet::Single(3).contains(2));
    }
}
