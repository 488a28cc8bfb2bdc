//! Nilpotency and solubility criteria phrased as `pr*` thresholds, checked
//! group by group.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::builders::build;
use crate::error::{GroupError, Result};
use crate::group::PermutationGroup;
use crate::par;
use crate::probability::{pr_star, prime_pairs, ratio, ExactRational, PrimeSet};
use crate::structure::{
    is_nilpotent, is_p_soluble, is_soluble, p_core, p_prime_core, sylow_subgroup, upper_fitting_series,
    FittingSeriesReport,
};

use super::corpus::CorpusEntry;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Threshold {
    Fixed(ExactRational),
    /// `(p1 + p2 - 1) / (p1 p2)` for the two smallest prime divisors
    SmallestPrimes,
    /// `(p + q - 1) / (pq)` with `q` the smallest prime divisor other than `p`
    SmallestOtherPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conclusion {
    Nilpotent,
    Soluble,
    /// `G = O_p(G) × O_{p'}(G)`
    CoreSplitting,
    /// the Sylow `p`-subgroups lie in `R(G)` and `G` is `p`-soluble
    SylowInRadical,
}

/// Which prime(s) an implication is stated for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrimeScope {
    /// a single statement about the whole group
    None,
    Fixed(u64),
    /// one instance per prime divisor `p` of `|G|` satisfying the filter
    EachDividing(PrimeFilter),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrimeFilter {
    Any,
    OddExcept(Vec<u64>),
    AtLeast(u64),
}

impl PrimeFilter {
    fn admits(&self, p: u64) -> bool {
        match self {
            PrimeFilter::Any => true,
            PrimeFilter::OddExcept(bad) => p != 2 && !bad.contains(&p),
            PrimeFilter::AtLeast(m) => p >= *m,
        }
    }
}

/// Prime-set pattern; `P` and `PPrime` refer to the instance prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SetPattern {
    Set(PrimeSet),
    P,
    PPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationSpec {
    pub id: String,
    pub statement: String,
    pub pi1: SetPattern,
    pub pi2: SetPattern,
    pub threshold: Threshold,
    pub conclusion: Conclusion,
    pub scope: PrimeScope,
}

fn spec(
    id: &str,
    statement: &str,
    pi1: SetPattern,
    pi2: SetPattern,
    threshold: Threshold,
    conclusion: Conclusion,
    scope: PrimeScope,
) -> ImplicationSpec {
    ImplicationSpec {
        id: id.into(),
        statement: statement.into(),
        pi1,
        pi2,
        threshold,
        conclusion,
        scope,
    }
}

/// Every built-in implication, each with a strict `>` hypothesis.
pub fn builtin_implications() -> Vec<ImplicationSpec> {
    use Conclusion as C;
    use SetPattern as S;
    use Threshold as T;
    let all = || S::Set(PrimeSet::All);
    let fixed = |n, d| T::Fixed(ratio(n, d));
    vec![
        spec(
            "T1.3-nilp",
            "pr*(G) > (p1+p2-1)/(p1 p2) for the two smallest prime divisors => G nilpotent",
            all(),
            all(),
            T::SmallestPrimes,
            C::Nilpotent,
            PrimeScope::None,
        ),
        spec(
            "P3.1",
            "pr*(G) > 2/3 => G nilpotent",
            all(),
            all(),
            fixed(2, 3),
            C::Nilpotent,
            PrimeScope::None,
        ),
        spec(
            "T1.3-sol",
            "pr*(G) > 2/5 => G soluble",
            all(),
            all(),
            fixed(2, 5),
            C::Soluble,
            PrimeScope::None,
        ),
        spec(
            "T1.4",
            "pr*_G(2',2') > 7/15 => G soluble",
            S::Set(PrimeSet::Odd),
            S::Set(PrimeSet::Odd),
            fixed(7, 15),
            C::Soluble,
            PrimeScope::None,
        ),
        spec(
            "T1.5",
            "pr*_G(2,2') > 2/5 => G soluble",
            S::Set(PrimeSet::Single(2)),
            S::Set(PrimeSet::Odd),
            fixed(2, 5),
            C::Soluble,
            PrimeScope::None,
        ),
        spec(
            "T1.6-1",
            "pr*_G(2,5') > 1/2 => G soluble",
            S::Set(PrimeSet::Single(2)),
            S::Set(PrimeSet::Complement(5)),
            fixed(1, 2),
            C::Soluble,
            PrimeScope::None,
        ),
        spec(
            "T1.6-2",
            "pr*_G(2,7') > 5/12 => G soluble",
            S::Set(PrimeSet::Single(2)),
            S::Set(PrimeSet::Complement(7)),
            fixed(5, 12),
            C::Soluble,
            PrimeScope::None,
        ),
        spec(
            "T1.6-3",
            "pr*_G(2,p') > 2/5 for an odd prime p other than 5, 7 => G soluble",
            S::Set(PrimeSet::Single(2)),
            S::PPrime,
            fixed(2, 5),
            C::Soluble,
            PrimeScope::EachDividing(PrimeFilter::OddExcept(vec![5, 7])),
        ),
        spec(
            "P3.2",
            "pr*_G(p,p') > (p+q-1)/(pq), q the smallest other prime divisor => G = O_p(G) x O_p'(G)",
            S::P,
            S::PPrime,
            T::SmallestOtherPrime,
            C::CoreSplitting,
            PrimeScope::EachDividing(PrimeFilter::Any),
        ),
        spec(
            "P3.8",
            "pr*_G(3,3') > 7/15 => Sylow 3-subgroups lie in R(G) and G is 3-soluble",
            S::P,
            S::PPrime,
            fixed(7, 15),
            C::SylowInRadical,
            PrimeScope::Fixed(3),
        ),
        spec(
            "P3.9",
            "pr*_G(p,p') > 2/5 for p >= 5 => Sylow p-subgroups lie in R(G) and G is p-soluble",
            S::P,
            S::PPrime,
            fixed(2, 5),
            C::SylowInRadical,
            PrimeScope::EachDividing(PrimeFilter::AtLeast(5)),
        ),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VerdictStatus {
    Confirmed,
    Vacuous,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub group_label: String,
    pub implication_id: String,
    pub hypothesis_value: ExactRational,
    pub threshold: ExactRational,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub status: VerdictStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    pub fn new(
        group_label: &str,
        implication_id: &str,
        hypothesis_value: ExactRational,
        threshold: ExactRational,
        conclusion_holds: bool,
        note: Option<String>,
    ) -> Self {
        let hypothesis_holds = hypothesis_value > threshold;
        Verdict::with_hypothesis(
            group_label,
            implication_id,
            hypothesis_value,
            threshold,
            hypothesis_holds,
            conclusion_holds,
            note,
        )
    }

    pub fn with_hypothesis(
        group_label: &str,
        implication_id: &str,
        hypothesis_value: ExactRational,
        threshold: ExactRational,
        hypothesis_holds: bool,
        conclusion_holds: bool,
        note: Option<String>,
    ) -> Self {
        let status = match (hypothesis_holds, conclusion_holds) {
            (false, _) => VerdictStatus::Vacuous,
            (true, true) => VerdictStatus::Confirmed,
            (true, false) => VerdictStatus::Counterexample,
        };
        Verdict {
            group_label: group_label.into(),
            implication_id: implication_id.into(),
            hypothesis_value,
            threshold,
            hypothesis_holds,
            conclusion_holds,
            status,
            note,
        }
    }
}

/// Everything the implications ask about one group, computed once.
pub struct GroupProfile {
    pub label: String,
    pub group: PermutationGroup,
    pub primes: Vec<u64>,
    /// maximum of `pr(P, Q)` over Sylow pairs, keyed by `(smaller, larger)`
    pub pair_max: BTreeMap<(u64, u64), ExactRational>,
    nilpotent: OnceLock<bool>,
    soluble: OnceLock<bool>,
    series: OnceLock<FittingSeriesReport>,
}

impl GroupProfile {
    pub fn new(label: &str, group: PermutationGroup) -> Result<Self> {
        let report = pr_star(&group, &PrimeSet::All, &PrimeSet::All)?;
        let pair_max = report.per_pair.into_iter().map(|e| ((e.p, e.q), e.max)).collect();
        Ok(GroupProfile {
            label: label.into(),
            primes: group.prime_divisors(),
            group,
            pair_max,
            nilpotent: OnceLock::new(),
            soluble: OnceLock::new(),
            series: OnceLock::new(),
        })
    }

    /// `pr*_G(π₁, π₂)` read off the cached pair maxima.
    pub fn pr_star(&self, pi1: &PrimeSet, pi2: &PrimeSet) -> ExactRational {
        prime_pairs(&self.primes, pi1, pi2)
            .iter()
            .map(|k| self.pair_max[k].clone())
            .min()
            .unwrap_or_else(ExactRational::one)
    }

    fn cached(cell: &OnceLock<bool>, f: impl FnOnce() -> Result<bool>) -> Result<bool> {
        if let Some(v) = cell.get() {
            return Ok(*v);
        }
        let v = f()?;
        Ok(*cell.get_or_init(|| v))
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Self::cached(&self.nilpotent, || is_nilpotent(&self.group))
    }

    pub fn is_soluble(&self) -> Result<bool> {
        Self::cached(&self.soluble, || is_soluble(&self.group))
    }

    pub fn fitting_series(&self) -> Result<&FittingSeriesReport> {
        if let Some(s) = self.series.get() {
            return Ok(s);
        }
        let s = upper_fitting_series(&self.group)?;
        Ok(self.series.get_or_init(|| s))
    }

    /// `|G : F(G)|` and `|G : F_2(G)|`.
    pub fn fitting_indices(&self) -> Result<(u128, u128)> {
        let s = self.fitting_series()?;
        let n = self.group.order();
        Ok((n / s.term(1).order(), n / s.term(2).order()))
    }

    fn smallest_other_prime(&self, p: u64) -> u64 {
        self.primes.iter().copied().find(|&q| q != p).unwrap_or({
            if p == 2 {
                3
            } else {
                2
            }
        })
    }

    fn threshold(&self, t: &Threshold, p: Option<u64>) -> ExactRational {
        let form = |a: u64, b: u64| ratio((a + b - 1) as u128, (a * b) as u128);
        match t {
            Threshold::Fixed(r) => r.clone(),
            Threshold::SmallestPrimes => {
                let p1 = self.primes.first().copied().unwrap_or(2);
                let p2 = self.primes.get(1).copied().unwrap_or(if p1 == 2 { 3 } else { 2 });
                form(p1, p2)
            }
            Threshold::SmallestOtherPrime => {
                let p = p.expect("instance prime");
                form(p, self.smallest_other_prime(p))
            }
        }
    }

    fn conclusion(&self, c: &Conclusion, p: Option<u64>) -> Result<bool> {
        match c {
            Conclusion::Nilpotent => self.is_nilpotent(),
            Conclusion::Soluble => self.is_soluble(),
            Conclusion::CoreSplitting => {
                let p = p.expect("instance prime");
                let op = p_core(&self.group, p)?;
                if op.order() != self.group.p_part(p) {
                    return Ok(false);
                }
                let opp = p_prime_core(&self.group, p)?;
                Ok(op.order() * opp.order() == self.group.order())
            }
            Conclusion::SylowInRadical => {
                let p = p.expect("instance prime");
                let s = sylow_subgroup(&self.group, p)?;
                let r = self.fitting_series()?.radical();
                Ok(s.is_subgroup_of(r) && is_p_soluble(&self.group, p)?)
            }
        }
    }

    fn instance_primes(&self, scope: &PrimeScope) -> Vec<Option<u64>> {
        match scope {
            PrimeScope::None => vec![None],
            PrimeScope::Fixed(p) => vec![Some(*p)],
            PrimeScope::EachDividing(f) => self.primes.iter().copied().filter(|&p| f.admits(p)).map(Some).collect(),
        }
    }

    /// One verdict per instance of `spec` for this group.
    pub fn evaluate(&self, spec: &ImplicationSpec) -> Result<Vec<Verdict>> {
        let mut out = Vec::new();
        for p in self.instance_primes(&spec.scope) {
            let resolve = |s: &SetPattern| match s {
                SetPattern::Set(x) => x.clone(),
                SetPattern::P => PrimeSet::Single(p.expect("instance prime")),
                SetPattern::PPrime => match p.expect("instance prime") {
                    2 => PrimeSet::Odd,
                    q => PrimeSet::Complement(q),
                },
            };
            let value = self.pr_star(&resolve(&spec.pi1), &resolve(&spec.pi2));
            let threshold = self.threshold(&spec.threshold, p);
            let conclusion = self.conclusion(&spec.conclusion, p)?;
            let id = match (p, &spec.scope) {
                (Some(p), PrimeScope::EachDividing(_)) => format!("{}[p={p}]", spec.id),
                _ => spec.id.clone(),
            };
            let mut note = None;
            if matches!(spec.threshold, Threshold::SmallestPrimes) && self.primes.len() < 2 {
                note = Some("fewer than two prime divisors; threshold uses the next prime".into());
            }
            if matches!(spec.threshold, Threshold::SmallestOtherPrime) && self.primes.len() < 2 {
                note = Some(format!(
                    "no other prime divisor; threshold uses q = {}",
                    self.smallest_other_prime(p.unwrap())
                ));
            }
            out.push(Verdict::new(&self.label, &id, value, threshold, conclusion, note));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub group_label: String,
    pub reason: String,
    pub budget: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRow {
    pub group_label: String,
    pub order: u128,
    pub pr_star: ExactRational,
    pub fitting_index: u128,
    pub f2_index: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub verdicts: Vec<Verdict>,
    pub skipped: Vec<Skip>,
    pub index_table: Vec<IndexRow>,
}

impl SuiteReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts
            .iter()
            .filter(|v| v.status == VerdictStatus::Counterexample)
    }

    pub fn passed(&self) -> bool {
        self.counterexamples().next().is_none()
    }

    /// Base implication ids with no `Confirmed` verdict.
    pub fn unconfirmed(&self, specs: &[ImplicationSpec]) -> Vec<String> {
        specs
            .iter()
            .filter(|s| {
                !self.verdicts.iter().any(|v| {
                    v.status == VerdictStatus::Confirmed
                        && (v.implication_id == s.id || v.implication_id.starts_with(&format!("{}[", s.id)))
                })
            })
            .map(|s| s.id.clone())
            .collect()
    }
}

fn run_one(entry: &CorpusEntry, specs: &[ImplicationSpec]) -> Result<(Vec<Verdict>, IndexRow)> {
    let group = build(&entry.expr)?;
    let profile = GroupProfile::new(&entry.label, group)?;
    let mut verdicts = Vec::new();
    for s in specs {
        verdicts.extend(profile.evaluate(s)?);
    }
    let (fitting_index, f2_index) = profile.fitting_indices()?;
    let row = IndexRow {
        group_label: entry.label.clone(),
        order: profile.group.order(),
        pr_star: profile.pr_star(&PrimeSet::All, &PrimeSet::All),
        fitting_index,
        f2_index,
    };
    Ok((verdicts, row))
}

/// Checks every spec on every corpus group. A group that cannot be built
/// or analysed within budget is skipped and reported.
pub fn run_suite(corpus: &[CorpusEntry], specs: &[ImplicationSpec]) -> SuiteReport {
    let results = par::map_slice(corpus, |e| run_one(e, specs));
    let mut report = SuiteReport::default();
    for (entry, r) in corpus.iter().zip(results) {
        match r {
            Ok((v, row)) => {
                report.verdicts.extend(v);
                report.index_table.push(row);
            }
            Err(e) => report.skipped.push(Skip {
                group_label: entry.label.clone(),
                budget: e.is_budget(),
                reason: e.to_string(),
            }),
        }
    }
    report
        .verdicts
        .sort_by(|a, b| (&a.group_label, &a.implication_id).cmp(&(&b.group_label, &b.implication_id)));
    report.index_table.sort_by(|a, b| a.group_label.cmp(&b.group_label));
    report.skipped.sort_by(|a, b| a.group_label.cmp(&b.group_label));
    report
}

/// Convenience for callers holding only a group.
pub fn profile_of(label: &str, group: &PermutationGroup) -> Result<GroupProfile> {
    GroupProfile::new(label, group.clone())
}

impl From<GroupError> for Skip {
    fn from(e: GroupError) -> Self {
        Skip {
            group_label: String::new(),
            budget: e.is_budget(),
            reason: e.to_string(),
        }
    }
}
