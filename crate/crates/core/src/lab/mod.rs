//! Runs the nilpotency and solubility criteria, the threshold examples and
//! the sampled inequalities over a corpus of groups.

pub mod corpus;
mod example44;
mod implications;
mod lemma27;
mod sampling;
mod sharpness;

pub use corpus::{builtin_corpus, parse_corpus, CorpusEntry};
pub use example44::{example44_report, Example44Report, HallPairRow, SylowPairRow};
pub use implications::{
    builtin_implications, profile_of, run_suite, Conclusion, GroupProfile, ImplicationSpec, IndexRow, PrimeFilter,
    PrimeScope, SetPattern, Skip, SuiteReport, Threshold, Verdict, VerdictStatus,
};
pub use lemma27::{large_prime_bound, lemma27_check};
pub use sampling::{sample_lemmas, SampleCheck, SamplingReport, DEFAULT_SAMPLE_MAX_ORDER};
pub use sharpness::{sharpness_witnesses, SharpnessItem, SharpnessReport};
