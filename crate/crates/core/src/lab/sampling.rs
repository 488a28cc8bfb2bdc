//! Deterministic sampling of the general `pr` inequalities over a corpus.
//!
//! For each group up to a size cap, Sylow pairs (with a few random
//! conjugates) and the normal subgroups met in the structure computations
//! serve as instances. The RNG is seeded from the corpus position, so a
//! rerun sees the same instances.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::builders::build;
use crate::error::{GroupError, Result};
use crate::group::PermutationGroup;
use crate::par;
use crate::primes::prime_power;
use crate::probability::{
    build_h0, centralizer_index_bound, check_product_rule, check_quotient_inequality, lemma24_bound, pr,
    pr_no_pq_formula, pr_star_all, ratio, xy_inequality_check, ExactRational,
};
use crate::structure::{
    fitting_subgroup, has_element_of_order, p_core, quotient_group, soluble_radical, sylow_subgroup,
};

use super::corpus::CorpusEntry;

/// Groups above this order are left out of the sample.
pub const DEFAULT_SAMPLE_MAX_ORDER: u128 = 2000;
const CONJUGATES_PER_PAIR: usize = 2;
const CONJUGATION_TRIALS: usize = 3;
const PRODUCT_MAX_ORDER: u128 = 120;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleCheck {
    pub property: String,
    pub group_label: String,
    pub instance: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingReport {
    pub checks: Vec<SampleCheck>,
    pub skipped: Vec<String>,
}

impl SamplingReport {
    pub fn failures(&self) -> impl Iterator<Item = &SampleCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn counts(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for c in &self.checks {
            *out.entry(c.property.clone()).or_insert(0) += 1;
        }
        out
    }
}

struct Sink<'a> {
    label: &'a str,
    out: Vec<SampleCheck>,
}

impl Sink<'_> {
    fn push(&mut self, property: &str, instance: String, holds: bool) {
        self.out.push(SampleCheck {
            property: property.into(),
            group_label: self.label.into(),
            instance,
            holds,
        });
    }
}

/// Nontrivial proper normal subgroups from the structure routines,
/// without repeats.
fn structural_normals(g: &PermutationGroup) -> Result<Vec<(String, PermutationGroup)>> {
    let mut found = vec![
        ("F".to_string(), fitting_subgroup(g)?),
        ("G'".to_string(), g.derived_subgroup()?),
        ("R".to_string(), soluble_radical(g)?),
    ];
    for p in g.prime_divisors() {
        found.push((format!("O_{p}"), p_core(g, p)?));
    }
    let mut out: Vec<(String, PermutationGroup)> = Vec::new();
    for (name, n) in found {
        if n.is_trivial() || n.order() == g.order() || out.iter().any(|(_, m)| m.same_subgroup(&n)) {
            continue;
        }
        out.push((name, n));
    }
    Ok(out)
}

fn sample_group(index: usize, entry: &CorpusEntry, g: &PermutationGroup) -> Result<Vec<SampleCheck>> {
    let mut sink = Sink {
        label: &entry.label,
        out: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5341_4d50 ^ index as u64);
    let primes = g.prime_divisors();
    let sylows: BTreeMap<u64, PermutationGroup> = primes
        .iter()
        .map(|&p| Ok((p, sylow_subgroup(g, p)?)))
        .collect::<Result<_>>()?;
    let normals = structural_normals(g)?;
    let star = pr_star_all(g)?;

    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            let sp = &sylows[&p];
            let no_pq = !has_element_of_order(g, p * q)?;
            let mut qs = vec![sylows[&q].clone()];
            for _ in 0..CONJUGATES_PER_PAIR {
                qs.push(sylows[&q].conjugate(&g.random_element(&mut rng))?);
            }
            for (k, sq) in qs.iter().enumerate() {
                let tag = format!("p={p} q={q} conjugate #{k}");
                let v = pr(sp, sq)?;
                sink.push("symmetry", tag.clone(), v == pr(sq, sp)?);
                sink.push(
                    "class-size-bound",
                    tag.clone(),
                    v <= lemma24_bound(sp, sq)? && v <= lemma24_bound(sq, sp)?,
                );

                let c = sp.centralizer_of_set(sq.generators())?;
                let n = (sp.order() / c.order()) as u64;
                let a = if n == 1 {
                    0
                } else {
                    prime_power(n).map(|(_, a)| a).unwrap_or(0)
                };
                let mut ok = v <= centralizer_index_bound(p, a, q);
                if n > 1 {
                    ok &= v <= ratio((p + q - 1) as u128, (p * q) as u128);
                }
                sink.push("centralizer-index-bound", tag.clone(), ok);

                if no_pq {
                    sink.push(
                        "no-pq-formula",
                        tag.clone(),
                        v == pr_no_pq_formula(sp.order(), sq.order())?,
                    );
                }

                let h0 = PermutationGroup::generated(g.degree(), &sp.generators()[..1])?;
                sink.push("subgroup-monotonicity", tag.clone(), pr(&h0, sq)? >= v);

                let h0_ok = match build_h0(sp, sq, &v) {
                    Ok(r) => ExactRational::from_integer(r.index) <= r.index_bound,
                    Err(GroupError::Inconsistent(_)) => false,
                    Err(e) => return Err(e),
                };
                sink.push("h0-construction", tag.clone(), h0_ok);

                for (name, nsub) in &normals {
                    let t = format!("{tag} N={name}");
                    sink.push(
                        "quotient-inequality",
                        t.clone(),
                        check_quotient_inequality(g, nsub, sp, sq)?,
                    );
                    let quo = quotient_group(g, nsub)?;
                    let top = pr(&quo.image_subgroup(sp)?, &quo.image_subgroup(sq)?)?;
                    sink.push("quotient-monotonicity", t, top >= v);
                }
            }
        }
    }

    for t in 0..CONJUGATION_TRIALS {
        let x = g.random_element(&mut rng);
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                let (sp, sq) = (&sylows[&p], &sylows[&q]);
                let same = pr(&sp.conjugate(&x)?, &sq.conjugate(&x)?)? == pr(sp, sq)?;
                sink.push("conjugation-invariance", format!("p={p} q={q} trial #{t}"), same);
            }
        }
    }

    for (name, nsub) in &normals {
        let quo = quotient_group(g, nsub)?;
        let ok = pr_star_all(quo.group())? >= star && pr_star_all(nsub)? >= star;
        sink.push("inheritance", format!("N={name}"), ok);
    }
    Ok(sink.out)
}

fn product_checks(groups: &[(String, PermutationGroup)]) -> Result<Vec<SampleCheck>> {
    let small: Vec<_> = groups.iter().filter(|(_, g)| g.order() <= PRODUCT_MAX_ORDER).collect();
    let mut out = Vec::new();
    for w in small.windows(2) {
        let ((l1, g1), (l2, g2)) = (w[0], w[1]);
        let (p1, p2) = (g1.prime_divisors(), g2.prime_divisors());
        for &(p, q) in &[(2u64, 3u64)] {
            if !(p1.contains(&p) && p1.contains(&q) && p2.contains(&p) && p2.contains(&q)) {
                continue;
            }
            let ok = check_product_rule(
                g1,
                g2,
                &sylow_subgroup(g1, p)?,
                &sylow_subgroup(g2, p)?,
                &sylow_subgroup(g1, q)?,
                &sylow_subgroup(g2, q)?,
            )?;
            out.push(SampleCheck {
                property: "product-rule".into(),
                group_label: format!("{l1} x {l2}"),
                instance: format!("p={p} q={q}"),
                holds: ok,
            });
        }
    }
    Ok(out)
}

fn xy_grid() -> SampleCheck {
    let holds = (1..=100).all(|x| (1..=100).all(|y| xy_inequality_check(x, y)));
    SampleCheck {
        property: "xy-inequality".into(),
        group_label: String::new(),
        instance: "1 <= x, y <= 100".into(),
        holds,
    }
}

/// Runs every sampled property over the corpus groups of order at most
/// `max_order`.
pub fn sample_lemmas(corpus: &[CorpusEntry], max_order: u128) -> SamplingReport {
    let built = par::map_slice(corpus, |e| build(&e.expr));
    let mut report = SamplingReport::default();
    let mut groups = Vec::new();
    for (i, (e, g)) in corpus.iter().zip(built).enumerate() {
        match g {
            Ok(g) if g.order() <= max_order => groups.push((i, e, g)),
            Ok(_) => {}
            Err(err) => report.skipped.push(format!("{}: {err}", e.label)),
        }
    }
    let results = par::map_slice(&groups, |(i, e, g)| sample_group(*i, e, g));
    for ((_, e, _), r) in groups.iter().zip(results) {
        match r {
            Ok(v) => report.checks.extend(v),
            Err(err) => report.skipped.push(format!("{}: {err}", e.label)),
        }
    }
    let labelled: Vec<(String, PermutationGroup)> =
        groups.iter().map(|(_, e, g)| (e.label.clone(), g.clone())).collect();
    match product_checks(&labelled) {
        Ok(v) => report.checks.extend(v),
        Err(err) => report.skipped.push(format!("product rule: {err}")),
    }
    report.checks.push(xy_grid());
    report
}
