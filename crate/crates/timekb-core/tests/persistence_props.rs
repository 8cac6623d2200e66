//! Randomized axiom suite for persistence schemata: every class
//! construction must satisfy its shape axiom, the homogeneity comparisons
//! must hold in the prose direction, and pointwise extrapolation must agree
//! with the instantiated profiles.

use proptest::prelude::*;

use timekb_core::logic::Atom;
use timekb_core::persistence::{
    backward_profile, check_d1, check_d2, check_d3, check_d4, check_h1, check_h2, check_h3,
    extrapolate, forward_profile, no_change_profile, with_change_profile, FluentSchema, FnRole,
    HDirection, PiecewiseLinearFn, Strictness,
};
use timekb_core::posslog::Degree;
use timekb_core::timeline::{ExtrapolationProblem, Interval, ProblemClass};
use timekb_core::{int, ratio, Rational};

fn degree_value() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![
        ratio(0, 1),
        ratio(1, 5),
        ratio(1, 4),
        ratio(1, 2),
        ratio(3, 4),
        ratio(9, 10),
        ratio(1, 1),
    ])
}

/// A well-formed schema function: starts at 1, strictly increasing offsets,
/// never rises.
fn schema_fn() -> impl Strategy<Value = PiecewiseLinearFn> {
    prop::collection::vec((1i64..=6, degree_value()), 0..3).prop_map(|steps| {
        let mut points = vec![(int(0), Degree::one())];
        let mut offset = int(0);
        let mut floor = ratio(1, 1);
        for (half_steps, value) in steps {
            offset += ratio(half_steps, 2);
            if value < floor {
                floor = value;
            }
            points.push((offset.clone(), Degree::new(floor.clone()).expect("grid degree")));
        }
        PiecewiseLinearFn::new(points).expect("generated breakpoints are well-formed")
    })
}

fn schema() -> impl Strategy<Value = FluentSchema> {
    (
        schema_fn(),
        schema_fn(),
        schema_fn(),
        schema_fn(),
        prop::sample::select(vec![ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(2, 3)]),
    )
        .prop_map(|(ft, bt, ff, bf, split)| {
            FluentSchema::new(Atom::new("A"), ft, bt, ff, bf)
                .expect("generated functions satisfy the schema invariants")
                .with_change_split(split)
                .expect("split is strictly inside (0, 1)")
        })
}

fn length() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![
        ratio(1, 2),
        ratio(1, 1),
        ratio(3, 2),
        ratio(2, 1),
        ratio(3, 1),
        ratio(5, 1),
        ratio(8, 1),
    ])
}

fn interior_fraction() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![ratio(1, 5), ratio(1, 3), ratio(1, 2), ratio(5, 8), ratio(7, 8)])
}

proptest! {
    /// Construction already rejects rising functions, so every accepted
    /// schema function passes the monotonicity axioms.
    #[test]
    fn accepted_schemata_satisfy_the_monotonicity_axioms(schema in schema()) {
        for role in FnRole::ALL {
            let function = schema.function(role);
            prop_assert!(check_d1(function, Strictness::NonIncreasing).passed);
            prop_assert!(check_d2(function, Strictness::NonIncreasing).passed);
        }
    }

    /// Forward and backward instantiations decay monotonically away from
    /// the reference point and start there fully certain.
    #[test]
    fn unbounded_profiles_have_the_expected_shape(
        schema in schema(),
        value in any::<bool>(),
        delta in length(),
    ) {
        let start = int(0);
        let fwd = forward_profile(&schema, value, &start, &delta);
        prop_assert_eq!(fwd.eval(&start).unwrap(), ratio(1, 1));
        for (_, _, trend) in fwd.trends() {
            prop_assert!(matches!(
                trend,
                timekb_core::persistence::Trend::Down | timekb_core::persistence::Trend::Flat
            ));
        }
        let zero = int(0);
        let bwd = backward_profile(&schema, value, &zero, &delta);
        prop_assert_eq!(bwd.eval(&delta).unwrap(), ratio(1, 1));
        for (_, _, trend) in bwd.trends() {
            prop_assert!(matches!(
                trend,
                timekb_core::persistence::Trend::Up | timekb_core::persistence::Trend::Flat
            ));
        }
    }

    /// The no-change construction is valley-shaped with fully certain ends.
    #[test]
    fn no_change_profiles_pass_d3(schema in schema(), value in any::<bool>(), delta in length()) {
        let (t0, t1) = (int(0), delta);
        let profile = no_change_profile(&schema, value, &t0, &t1);
        let report = check_d3(&profile);
        prop_assert!(report.passed, "{}", report);
        prop_assert_eq!(profile.eval(&t0).unwrap(), ratio(1, 1));
        prop_assert_eq!(profile.eval(&t1).unwrap(), ratio(1, 1));
    }

    /// The with-change construction passes D4, dies at the split point on
    /// both sides, and is fully certain at its informative ends.
    #[test]
    fn with_change_profiles_pass_d4(
        schema in schema(),
        left_value in any::<bool>(),
        delta in length(),
    ) {
        let (t0, t1) = (int(0), delta.clone());
        let (outgoing, incoming) = with_change_profile(&schema, left_value, &t0, &t1);
        let report = check_d4(&outgoing, &incoming);
        prop_assert!(report.passed, "{}", report);
        prop_assert_eq!(outgoing.eval(&t0).unwrap(), ratio(1, 1));
        prop_assert_eq!(incoming.eval(&t1).unwrap(), ratio(1, 1));
        let split = schema.change_split() * &delta;
        prop_assert_eq!(outgoing.eval(&split).unwrap(), ratio(0, 1));
        prop_assert_eq!(incoming.eval(&split).unwrap(), ratio(0, 1));
    }

    /// Homogeneity holds in the prose direction for every schema, and
    /// equal lengths instantiate to pointwise-identical functions.
    #[test]
    fn homogeneity_comparisons_pass(schema in schema(), d1 in length(), d2 in length()) {
        let h1 = check_h1(&schema, &d1, &d2, HDirection::Prose);
        prop_assert!(h1.passed, "{}", h1);
        let h2 = check_h2(&schema, &d1);
        prop_assert!(h2.passed, "{}", h2);
        let h3 = check_h3(&schema, &d1, &d2, HDirection::Prose);
        prop_assert!(h3.passed, "{}", h3);

        let equal = check_h1(&schema, &d1, &d1, HDirection::Prose);
        prop_assert!(equal.passed, "{}", equal);
        let equal = check_h3(&schema, &d1, &d1, HDirection::Displayed);
        prop_assert!(equal.passed, "{}", equal);
    }

    /// Extrapolation never produces positive certainty for both polarities,
    /// and it agrees pointwise with the instantiated profiles.
    #[test]
    fn extrapolation_is_consistent_and_matches_profiles(
        schema in schema(),
        value in any::<bool>(),
        delta in length(),
        fraction in interior_fraction(),
    ) {
        let fluent = Atom::new("A");
        let (t0, t1) = (int(0), delta.clone());
        let t = &t0 + &delta * &fraction;

        // bounded, no change
        let problem = ExtrapolationProblem::new(
            fluent.clone(),
            Interval::open(t0.clone(), t1.clone()).unwrap(),
            ProblemClass::BoundedNoChange,
            Some(value),
            Some(value),
        )
        .unwrap();
        let degrees = extrapolate(&problem, &schema, &t).unwrap();
        prop_assert!(degrees.n_true().is_zero() || degrees.n_false().is_zero());
        let profile = no_change_profile(&schema, value, &t0, &t1);
        let known = if value { degrees.n_true() } else { degrees.n_false() };
        prop_assert_eq!(&profile.eval(&t).unwrap(), known.value());

        // bounded, with change
        let problem = ExtrapolationProblem::new(
            fluent.clone(),
            Interval::open(t0.clone(), t1.clone()).unwrap(),
            ProblemClass::BoundedWithChange,
            Some(value),
            Some(!value),
        )
        .unwrap();
        let degrees = extrapolate(&problem, &schema, &t).unwrap();
        prop_assert!(degrees.n_true().is_zero() || degrees.n_false().is_zero());
        let (outgoing, incoming) = with_change_profile(&schema, value, &t0, &t1);
        let (out_degree, in_degree) = if value {
            (degrees.n_true(), degrees.n_false())
        } else {
            (degrees.n_false(), degrees.n_true())
        };
        prop_assert_eq!(&outgoing.eval(&t).unwrap(), out_degree.value());
        prop_assert_eq!(&incoming.eval(&t).unwrap(), in_degree.value());

        // unbounded forward/backward against the raw schema functions
        let problem = ExtrapolationProblem::new(
            fluent.clone(),
            Interval::above(t0.clone()),
            ProblemClass::ForwardUnbounded,
            Some(value),
            None,
        )
        .unwrap();
        let degrees = extrapolate(&problem, &schema, &t).unwrap();
        let known = if value { degrees.n_true() } else { degrees.n_false() };
        prop_assert_eq!(known, &schema.forward(value).eval(&(&t - &t0)).unwrap());

        let problem = ExtrapolationProblem::new(
            fluent,
            Interval::below(t1.clone()),
            ProblemClass::BackwardUnbounded,
            None,
            Some(value),
        )
        .unwrap();
        let degrees = extrapolate(&problem, &schema, &t).unwrap();
        let known = if value { degrees.n_true() } else { degrees.n_false() };
        prop_assert_eq!(known, &schema.backward(value).eval(&(&t1 - &t)).unwrap());
    }
}
