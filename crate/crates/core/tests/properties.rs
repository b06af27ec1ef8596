//! Property tests against the independent oracles in `common`.

mod common;

use num_rational::BigRational;
use orderfix::engine::build_witness;
use orderfix::equivalence::{are_equivalent, canonical_form, canonical_key};
use orderfix::landmark::PointCloud;
use orderfix::sign::{fadd, fmul};
use orderfix::{
    AxisSet, ConfigSign, Configuration, Engine, FixityVerdict, FormalSign, GroupElement, LabelSet,
    Ordering, PointAssignment, Status,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn linear(n: usize) -> impl Strategy<Value = Configuration> {
    prop::collection::vec(perm(n), n - 1).prop_map(move |chains| {
        Configuration::from_index_chains(LabelSet::letters(n), AxisSet::standard(n - 1), &chains).unwrap()
    })
}

/// Sub-relation of a random linear configuration: each axis keeps a random
/// subset of its covering pairs.
fn partial(n: usize) -> impl Strategy<Value = Configuration> {
    (linear(n), prop::collection::vec(prop::collection::vec(any::<bool>(), n - 1), n - 1)).prop_map(
        move |(c, keep)| {
            let orders = (0..n - 1)
                .map(|b| {
                    let chain = c.ordering(b).chain().unwrap();
                    let pairs = chain
                        .windows(2)
                        .zip(&keep[b])
                        .filter(|(_, &k)| k)
                        .map(|(w, _)| (w[0], w[1]));
                    Ordering::from_pairs(n, pairs).unwrap()
                })
                .collect();
            Configuration::new(c.labels().clone(), c.axes().clone(), orders).unwrap()
        },
    )
}

fn group_element(n: usize) -> impl Strategy<Value = GroupElement> {
    (perm(n - 1), perm(n), prop::collection::vec(any::<bool>(), n - 1))
        .prop_map(|(a, l, r)| GroupElement::new(a, l, r).unwrap())
}

fn labels_and_axes(n: usize) -> (LabelSet, AxisSet) {
    (LabelSet::letters(n), AxisSet::standard(n - 1))
}

fn points(values: &[Vec<i128>]) -> PointAssignment {
    let n = values.len();
    let (l, a) = labels_and_axes(n);
    let v = values
        .iter()
        .map(|p| p.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    PointAssignment::new(l, a, v).unwrap()
}

fn formal(s: i128) -> FormalSign {
    if s > 0 {
        FormalSign::Plus
    } else {
        FormalSign::Minus
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reversal_is_an_involution(c in partial(4)) {
        prop_assert_eq!(c.reversed().reversed(), c);
    }

    #[test]
    fn induced_commutes_with_reversal(c in linear(5), keep in subsequence((0..5).collect::<Vec<_>>(), 3)) {
        let axes = [0, 2];
        prop_assert_eq!(
            c.induced_idx(&keep, &axes).reversed(),
            c.reversed().induced_idx(&keep, &axes)
        );
    }

    #[test]
    fn satisfying_an_extension_satisfies_the_original(c in partial(4), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        for ext in c.extensions().take(4) {
            let p = points(&common::realize(&ext, &mut rng));
            prop_assert!(p.satisfies(&ext).unwrap());
            prop_assert!(p.satisfies(&c).unwrap());
        }
    }

    #[test]
    fn det_flips_under_label_swap_and_ignores_translation(
        c in linear(4), seed in any::<u64>(), shift in prop::collection::vec(-1000i128..1000, 3)
    ) {
        let mut rng = common::rng(seed);
        let mut v = common::realize(&c, &mut rng);
        let d = common::det_i128(&common::padded(&v));
        prop_assert_eq!(points(&v).det().unwrap(), BigRational::from_integer(d.into()));
        let moved: Vec<Vec<i128>> = v.iter().map(|p| p.iter().zip(&shift).map(|(x, s)| x + s).collect()).collect();
        prop_assert_eq!(common::det_i128(&common::padded(&moved)), d);
        v.swap(0, 3);
        prop_assert_eq!(common::det_i128(&common::padded(&v)), -d);
    }

    #[test]
    fn group_action_laws(c in linear(4), g in group_element(4), h in group_element(4)) {
        let gh = g.compose(&h);
        prop_assert_eq!(gh.apply(&c).unwrap(), g.apply(&h.apply(&c).unwrap()).unwrap());
        prop_assert_eq!(g.inverse().apply(&g.apply(&c).unwrap()).unwrap(), c.clone());
        prop_assert_eq!(gh.sign_parity(), g.sign_parity() * h.sign_parity());
        prop_assert!(are_equivalent(&c, &g.apply(&c).unwrap()).unwrap());
        prop_assert_eq!(canonical_key(&c).unwrap(), canonical_key(&g.apply(&c).unwrap()).unwrap());
    }

    #[test]
    fn parity_predicts_realized_signs(c in linear(4), g in group_element(4), seed in any::<u64>()) {
        // Move a realization of `c` along with `g` and compare determinants.
        let mut rng = common::rng(seed);
        let v = common::realize(&c, &mut rng);
        let moved_cfg = g.apply(&c).unwrap();
        let moved = transport_points(&g, &v);
        let p = points(&moved);
        prop_assert!(p.satisfies(&moved_cfg).unwrap());
        let before = common::det_i128(&common::padded(&v)).signum();
        let after = common::det_i128(&common::padded(&moved)).signum();
        let parity = if g.sign_parity() == FormalSign::Plus { 1 } else { -1 };
        prop_assert_eq!(after, parity * before);
    }

    #[test]
    fn equivalence_preserves_verdicts(c in linear(4), g in group_element(4)) {
        let e = Engine::default();
        let a = e.decide(&c).unwrap();
        let b = e.decide(&g.apply(&c).unwrap()).unwrap();
        prop_assert_eq!(a.status(), b.status());
        if let Some(s) = a.sign().filter(|s| s.is_definite()) {
            prop_assert_eq!(b.sign(), Some(s.times(g.sign_parity())));
        }
        let (canon, h) = canonical_form(&c).unwrap();
        prop_assert_eq!(h.apply(&c).unwrap(), canon);
    }

    #[test]
    fn partial_verdicts_are_sound(c in partial(4), seed in any::<u64>()) {
        let e = Engine::default();
        match e.decide(&c).unwrap() {
            FixityVerdict::Fixed { sign, .. } => {
                let (pos, neg, zero) = common::sampled_signs(&c, seed, 200);
                let want = if sign == ConfigSign::Plus { (200, 0, 0) } else { (0, 200, 0) };
                prop_assert_eq!((pos, neg, zero), want);
            }
            FixityVerdict::NonFixed { certificate } => {
                build_witness(&c, &certificate).unwrap().verify(&c).unwrap();
            }
            FixityVerdict::Unknown { .. } => prop_assert!(false, "unknown at four labels"),
        }
    }

    #[test]
    fn formal_rules_are_sound_on_reals(a in -100i128..100, b in -100i128..100) {
        prop_assume!(a != 0 && b != 0);
        prop_assert_eq!(fmul(formal(a), formal(b)), formal(a * b));
        let sum = fadd(formal(a), formal(b));
        if sum.is_definite() {
            prop_assert_eq!(sum, formal(a + b));
        }
    }

    #[test]
    fn derived_orders_ignore_monotone_rescaling(
        raw in prop::collection::vec(prop::collection::vec(-20i64..20, 3), 4),
        scale in 1i64..7, offset in -50i64..50
    ) {
        let csv = |f: &dyn Fn(i64) -> i64| {
            let mut s = String::from("label,x,y,z\n");
            for (i, p) in raw.iter().enumerate() {
                s.push_str(&format!("p{i},{},{},{}\n", f(p[0]), f(p[1]), f(p[2])));
            }
            PointCloud::from_csv(&s).unwrap()
        };
        let names = ["p0", "p1", "p2", "p3"];
        let a = csv(&|x| x).derive_configuration(&names).unwrap();
        let b = csv(&|x| scale * x * x * x + offset).derive_configuration(&names).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn distinct_clouds_satisfy_and_decide(c in linear(4), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let v = common::realize(&c, &mut rng);
        let mut s = String::from("label,x,y,z\n");
        for (i, p) in v.iter().enumerate() {
            s.push_str(&format!("{},{},{},{}\n", c.labels().name(i), p[0], p[1], p[2]));
        }
        let cloud = PointCloud::from_csv(&s).unwrap();
        let derived = cloud.derive_configuration(c.labels().names()).unwrap();
        prop_assert_eq!(&derived, &c);
        prop_assert!(cloud.assignment(&[0, 1, 2, 3]).unwrap().satisfies(&derived).unwrap());
        prop_assert_ne!(Engine::default().decide(&derived).unwrap().status(), Status::Unknown);
    }
}

/// Applies `g` to point coordinates the way it acts on orderings: axis `k`
/// moves to `axis_perm[k]` (negated when reversed) and label `e` to
/// `label_perm[e]`.
fn transport_points(g: &GroupElement, v: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = v.len();
    let mut out = vec![vec![0i128; n - 1]; n];
    for e in 0..n {
        for k in 0..n - 1 {
            let x = v[e][k];
            out[g.label_perm()[e]][g.axis_perm()[k]] = if g.reversed()[k] { -x } else { x };
        }
    }
    out
}
