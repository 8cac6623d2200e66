//! Property tests for the possibilistic semantics against an independent
//! enumeration oracle, plus the algebraic laws the measures must satisfy.

use proptest::prelude::*;

use timekb_core::logic::{evaluate, Formula, Interpretation};
use timekb_core::posslog::{Degree, PossibilisticKb};
use timekb_core::{ratio, Rational};

// ---- independent oracle ------------------------------------------------
//
// Computes the least-specific distribution and all three measures from
// scratch: its own atom indexing, its own bit-mask interpretations, its
// own recursive evaluation on an explicitly materialized distribution
// table.

fn oracle_atoms(phi: &Formula, out: &mut Vec<String>) {
    match phi {
        Formula::Top | Formula::Bottom => {}
        Formula::Atom(a) => {
            if !out.iter().any(|n| n == a.name()) {
                out.push(a.name().to_string());
            }
        }
        Formula::Not(inner) => oracle_atoms(inner, out),
        Formula::And(l, r) | Formula::Or(l, r) => {
            oracle_atoms(l, out);
            oracle_atoms(r, out);
        }
    }
}

fn oracle_eval(phi: &Formula, names: &[String], mask: usize) -> bool {
    match phi {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(a) => {
            let i = names.iter().position(|n| n == a.name()).expect("atom indexed");
            mask & (1 << i) != 0
        }
        Formula::Not(inner) => !oracle_eval(inner, names, mask),
        Formula::And(l, r) => oracle_eval(l, names, mask) && oracle_eval(r, names, mask),
        Formula::Or(l, r) => oracle_eval(l, names, mask) || oracle_eval(r, names, mask),
    }
}

struct OracleMeasures {
    necessity: Rational,
    possibility: Rational,
    inconsistency: Rational,
}

fn oracle_measures(entries: &[(Formula, Rational)], query: &Formula) -> OracleMeasures {
    let mut names = Vec::new();
    for (phi, _) in entries {
        oracle_atoms(phi, &mut names);
    }
    oracle_atoms(query, &mut names);
    let one = ratio(1, 1);
    let zero = ratio(0, 1);

    let pi_table: Vec<Rational> = (0..(1usize << names.len()))
        .map(|mask| {
            entries
                .iter()
                .filter(|(phi, _)| !oracle_eval(phi, &names, mask))
                .map(|(_, alpha)| &one - alpha)
                .min()
                .unwrap_or_else(|| one.clone())
        })
        .collect();

    let necessity = pi_table
        .iter()
        .enumerate()
        .filter(|(mask, _)| !oracle_eval(query, &names, *mask))
        .map(|(_, pi)| &one - pi)
        .min()
        .unwrap_or_else(|| one.clone());
    let possibility = pi_table
        .iter()
        .enumerate()
        .filter(|(mask, _)| oracle_eval(query, &names, *mask))
        .map(|(_, pi)| pi.clone())
        .max()
        .unwrap_or_else(|| zero.clone());
    let inconsistency = &one - pi_table.iter().max().expect("at least one interpretation");

    OracleMeasures { necessity, possibility, inconsistency }
}

// ---- generators --------------------------------------------------------

fn degree_value() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![
        ratio(1, 4),
        ratio(1, 3),
        ratio(1, 2),
        ratio(3, 5),
        ratio(2, 3),
        ratio(4, 5),
        ratio(1, 1),
    ])
}

fn pi_value() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![
        ratio(0, 1),
        ratio(1, 5),
        ratio(1, 4),
        ratio(1, 2),
        ratio(3, 4),
        ratio(1, 1),
    ])
}

fn formula_strategy() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        6 => prop::sample::select(vec!["A", "B", "C"]).prop_map(Formula::atom),
        1 => Just(Formula::Top),
        1 => Just(Formula::Bottom),
    ];
    leaf.prop_recursive(2, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::or(l, r)),
        ]
    })
}

fn entries_strategy() -> impl Strategy<Value = Vec<(Formula, Rational)>> {
    prop::collection::vec((formula_strategy(), degree_value()), 0..4)
}

fn kb_of(entries: &[(Formula, Rational)]) -> PossibilisticKb {
    entries
        .iter()
        .map(|(phi, alpha)| (phi.clone(), Degree::new(alpha.clone()).expect("grid degree")))
        .collect()
}

// ---- properties --------------------------------------------------------

proptest! {
    /// All three measures agree with the independent enumeration oracle.
    #[test]
    fn measures_match_oracle(entries in entries_strategy(), query in formula_strategy()) {
        let kb = kb_of(&entries);
        let oracle = oracle_measures(&entries, &query);
        prop_assert_eq!(kb.necessity(&query).into_value(), oracle.necessity);
        prop_assert_eq!(kb.possibility(&query).into_value(), oracle.possibility);
        prop_assert_eq!(kb.inconsistency_degree().into_value(), oracle.inconsistency);
    }

    /// Duality: N(φ) = 1 - Π(¬φ).
    #[test]
    fn necessity_possibility_duality(entries in entries_strategy(), query in formula_strategy()) {
        let kb = kb_of(&entries);
        let lhs = kb.necessity(&query);
        let rhs = kb.possibility(&Formula::not(query)).complement();
        prop_assert_eq!(lhs, rhs);
    }

    /// Minitivity: N(φ ∧ ψ) = min(N(φ), N(ψ)).
    #[test]
    fn necessity_decomposes_over_conjunction(
        entries in entries_strategy(),
        phi in formula_strategy(),
        psi in formula_strategy(),
    ) {
        let kb = kb_of(&entries);
        let joint = kb.necessity(&Formula::and(phi.clone(), psi.clone()));
        let split = kb.necessity(&phi).min(kb.necessity(&psi));
        prop_assert_eq!(joint, split);
    }

    /// Contradiction floor: min(N(φ), N(¬φ)) is the inconsistency degree,
    /// for every formula.
    #[test]
    fn contradiction_floor(entries in entries_strategy(), phi in formula_strategy()) {
        let kb = kb_of(&entries);
        let floor = kb.necessity(&phi).min(kb.necessity(&Formula::not(phi)));
        prop_assert_eq!(floor, kb.inconsistency_degree());
    }

    /// Every stated bound is honoured: N(φᵢ) >= αᵢ.
    #[test]
    fn bounds_are_sound(entries in entries_strategy()) {
        let kb = kb_of(&entries);
        for entry in kb.entries() {
            prop_assert!(kb.necessity(&entry.formula) >= entry.lower_bound);
        }
    }

    /// Least specificity, constructively: take any distribution π, read off
    /// the exact necessities of a few formulas as constraints, and the
    /// least-specific distribution of that base dominates π pointwise.
    #[test]
    fn least_specific_distribution_dominates_its_sources(
        pi_raw in prop::collection::vec(pi_value(), 8),
        formulas in prop::collection::vec(formula_strategy(), 1..4),
    ) {
        let vocab: std::collections::BTreeSet<_> =
            ["A", "B", "C"].iter().map(|n| timekb_core::logic::Atom::new(*n)).collect();
        let worlds: Vec<Interpretation> = Interpretation::all(&vocab).collect();
        let pi = |omega: &Interpretation| -> Rational {
            let index = worlds.iter().position(|w| w == omega).expect("enumerated");
            pi_raw[index].clone()
        };

        // exact necessity of each formula under π
        let one = ratio(1, 1);
        let mut kb = PossibilisticKb::new();
        for phi in &formulas {
            let alpha = worlds
                .iter()
                .filter(|w| !evaluate(w, phi).expect("vocabulary covers"))
                .map(|w| &one - pi(w))
                .min()
                .unwrap_or_else(|| one.clone());
            kb.insert(phi.clone(), Degree::new(alpha).expect("necessity is a degree"));
        }

        for omega in &worlds {
            let ceiling = kb.least_specific_pi(omega).expect("vocabulary covers");
            prop_assert!(pi(omega) <= ceiling.into_value());
        }
    }

    /// Least specificity, filtered: any randomly drawn distribution that
    /// happens to satisfy the base is dominated by the least-specific one.
    #[test]
    fn admissible_distributions_are_dominated(
        entries in entries_strategy(),
        pi_raw in prop::collection::vec(pi_value(), 8),
    ) {
        let kb = kb_of(&entries);
        let mut vocab = kb.vocabulary();
        for name in ["A", "B", "C"] {
            vocab.insert(timekb_core::logic::Atom::new(name));
        }
        let worlds: Vec<Interpretation> = Interpretation::all(&vocab).collect();
        let one = ratio(1, 1);
        let pi_of = |i: usize| pi_raw[i % pi_raw.len()].clone();

        let satisfies = kb.entries().all(|entry| {
            let necessity = worlds
                .iter()
                .enumerate()
                .filter(|(_, w)| !evaluate(w, &entry.formula).expect("vocabulary covers"))
                .map(|(i, _)| &one - pi_of(i))
                .min()
                .unwrap_or_else(|| one.clone());
            necessity >= entry.lower_bound.clone().into_value()
        });
        prop_assume!(satisfies);

        for (i, omega) in worlds.iter().enumerate() {
            let ceiling = kb.least_specific_pi(omega).expect("vocabulary covers");
            prop_assert!(pi_of(i) <= ceiling.into_value());
        }
    }

    /// Accepting a conclusion forbids accepting its negation.
    #[test]
    fn acceptance_is_exclusive(entries in entries_strategy(), psi in formula_strategy()) {
        let kb = kb_of(&entries);
        if kb.nm_accepts(&psi) {
            prop_assert!(!kb.nm_accepts(&Formula::not(psi)));
        }
    }

    /// The conditional relation with a tautological condition is plain
    /// acceptance.
    #[test]
    fn conditioning_on_truth_is_plain_acceptance(
        entries in entries_strategy(),
        psi in formula_strategy(),
    ) {
        let kb = kb_of(&entries);
        prop_assert_eq!(kb.nm_entails(&Formula::Top, &psi), kb.nm_accepts(&psi));
    }
}
