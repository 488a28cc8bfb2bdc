//! Library results against brute force on small groups.

mod common;

use std::collections::{BTreeMap, HashSet};

use proptest::prelude::*;
use sylprob_core::lab::builtin_corpus;
use sylprob_core::probability::{lemma24_bound, omega_set, pr, pr_star, ratio};
use sylprob_core::structure::{
    element_order_census, fitting_subgroup, hall_p_complement, is_soluble, p_core, quotient_group, sylow_subgroup,
};
use sylprob_core::{build, ExactRational, Permutation, PermutationGroup, PrimeSet};

use common::{group, Raw};

#[test]
fn omega_matches_all_pairs() {
    for name in ["Sym(4)", "Sym(5)", "Alt(5)", "D(6)", "PSL2(7)", "D(15)", "Alt(4)"] {
        let g = group(name);
        let primes = g.prime_divisors();
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                let want = common::omega(&g, &sylow_subgroup(&g, p).unwrap(), &sylow_subgroup(&g, q).unwrap());
                assert_eq!(omega_set(&g, p, q).unwrap().values, want, "{name} ({p},{q})");
            }
        }
    }
}

#[test]
fn pr_star_matches_min_of_max() {
    for name in ["Sym(4)", "Sym(5)", "Alt(5)", "D(12)", "Sym(3) * C(5)"] {
        let g = group(name);
        let primes = g.prime_divisors();
        let mut maxima = Vec::new();
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                let vals = common::omega(&g, &sylow_subgroup(&g, p).unwrap(), &sylow_subgroup(&g, q).unwrap());
                maxima.push(vals.last().unwrap().clone());
            }
        }
        let want = maxima.into_iter().min().unwrap_or_else(ExactRational::one);
        assert_eq!(
            pr_star(&g, &PrimeSet::All, &PrimeSet::All).unwrap().value,
            want,
            "{name}"
        );
    }
}

#[test]
fn fitting_is_product_of_cores() {
    for name in [
        "Sym(4)",
        "D(6)",
        "Alt(4)",
        "InvolutionExample(2)",
        "Sym(3) * C(4)",
        "Alt(5) * C(6)",
    ] {
        let g = group(name);
        let ge = common::elements(&g);
        let mut want = 1u128;
        for p in g.prime_divisors() {
            let se = common::elements(&sylow_subgroup(&g, p).unwrap());
            let core = common::core(&ge, &se);
            assert_eq!(p_core(&g, p).unwrap().order(), core.len() as u128, "{name} O_{p}");
            want *= core.len() as u128;
        }
        assert_eq!(fitting_subgroup(&g).unwrap().order(), want, "{name}");
    }
}

fn derived_oracle(els: &HashSet<Raw>, degree: usize) -> HashSet<Raw> {
    let comms: Vec<Permutation> = els
        .iter()
        .flat_map(|a| {
            els.iter()
                .map(move |b| common::mul(&common::mul(&common::inv(a), &common::inv(b)), &common::mul(a, b)))
        })
        .collect::<HashSet<_>>()
        .into_iter()
        .map(|r| Permutation::from_images(r).unwrap())
        .collect();
    common::closure(degree, &comms)
}

#[test]
fn solubility_matches_derived_series() {
    for name in ["Sym(3)", "Sym(4)", "Alt(5)", "D(6)", "Alt(4)", "Sym(5)", "PSL2(7)"] {
        let g = group(name);
        let mut cur = common::elements(&g);
        loop {
            let next = derived_oracle(&cur, g.degree());
            if next.len() == cur.len() {
                break;
            }
            cur = next;
        }
        assert_eq!(is_soluble(&g).unwrap(), cur.len() == 1, "{name}");
    }
}

#[test]
fn element_orders_match() {
    for name in ["Alt(5)", "PSL2(7)", "Sym(4) * C(3)"] {
        let g = group(name);
        let mut want: BTreeMap<u64, u64> = BTreeMap::new();
        for x in common::elements(&g) {
            *want.entry(common::element_order(&x)).or_insert(0) += 1;
        }
        assert_eq!(element_order_census(&g).unwrap(), want, "{name}");
    }
}

#[test]
fn quotient_sizes_and_images() {
    let g = group("Sym(4)");
    let n = p_core(&g, 2).unwrap();
    let q = quotient_group(&g, &n).unwrap();
    assert_eq!(q.group().order(), 6);
    let ge = common::elements(&g);
    let ne = common::elements(&n);
    // cosets by brute force
    let mut cosets: Vec<Vec<Raw>> = ge
        .iter()
        .map(|x| {
            let mut c: Vec<Raw> = ne.iter().map(|y| common::mul(y, x)).collect();
            c.sort();
            c
        })
        .collect();
    cosets.sort();
    cosets.dedup();
    assert_eq!(cosets.len() as u128, q.group().order());
    let p2 = sylow_subgroup(&g, 2).unwrap();
    assert_eq!(q.image_subgroup(&p2).unwrap().order(), 2);
}

#[test]
fn hall_complements_are_hall() {
    for (name, p) in [
        ("Sym(4)", 2),
        ("Sym(4)", 3),
        ("D(15)", 3),
        ("InvolutionExample(3)", 5),
        ("Sym(3) * D(5)", 2),
    ] {
        let g = group(name);
        let h = hall_p_complement(&g, p).unwrap().group;
        let he = common::elements(&h);
        assert!(he.is_subset(&common::elements(&g)));
        assert!(
            he.iter().all(|x| !common::element_order(x).is_multiple_of(p)),
            "{name} p={p}"
        );
        assert_eq!(he.len() as u128 * g.p_part(p), g.order(), "{name} p={p}");
    }
}

#[test]
fn corpus_orders_match_enumeration() {
    for e in builtin_corpus(false) {
        let g = build(&e.expr).unwrap();
        if g.order() <= 20_000 {
            assert_eq!(common::elements(&g).len() as u128, g.order(), "{}", e.label);
        }
    }
}

fn small_perm(deg: usize) -> impl Strategy<Value = Permutation> {
    Just((0..deg as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn subgroup(deg: usize) -> impl Strategy<Value = PermutationGroup> {
    prop::collection::vec(small_perm(deg), 1..3).prop_map(move |gens| PermutationGroup::generated(deg, &gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn pr_agrees_with_brute_force(h in subgroup(5), k in subgroup(5)) {
        let v = pr(&h, &k).unwrap();
        prop_assert_eq!(&v, &common::pr(&common::elements(&h), &common::elements(&k)));
        prop_assert_eq!(&v, &pr(&k, &h).unwrap());
        prop_assert!(v.is_positive() && v <= ratio(1, 1));
    }

    #[test]
    fn pr_is_conjugation_invariant(h in subgroup(6), k in subgroup(6), x in small_perm(6)) {
        let a = pr(&h, &k).unwrap();
        let b = pr(&h.conjugate(&x).unwrap(), &k.conjugate(&x).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn smaller_first_factor_raises_pr(h in subgroup(5), k in subgroup(5)) {
        let h0 = PermutationGroup::generated(5, &h.generators()[..h.generators().len().min(1)]).unwrap();
        prop_assert!(pr(&h0, &k).unwrap() >= pr(&h, &k).unwrap());
    }

    #[test]
    fn class_size_bound_holds(h in subgroup(5), k in subgroup(5)) {
        prop_assert!(pr(&h, &k).unwrap() <= lemma24_bound(&h, &k).unwrap());
    }

    #[test]
    fn rational_and_primeset_round_trip(n in 0u64..500, d in 1u64..500, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let r = ratio(n as u128, d as u128);
        prop_assert_eq!(r.to_string().parse::<ExactRational>().unwrap(), r.clone());
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactRational>(&json).unwrap(), r);
        for s in [PrimeSet::Single(p), PrimeSet::Complement(p)] {
            let back = s.to_string().parse::<PrimeSet>().unwrap();
            prop_assert!((2..60).all(|q| back.contains(q) == s.contains(q)));
        }
    }
}
