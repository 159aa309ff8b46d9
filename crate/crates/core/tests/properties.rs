use proptest::prelude::*;

use pil_core::bijection::{backward_map, decompose, forward_map, BaseVariant, Direction, PairedPartition, Triple};
use pil_core::partitions::{enumerate, satisfies, ConstraintFamily, Partition};
use pil_core::qseries::{pochhammer_finite, pochhammer_infinite, Sign, TruncatedSeries};

const ORDER: usize = 24;

fn series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-20i64..20, 0..=ORDER + 1).prop_map(|c| TruncatedSeries::from_coeffs(ORDER, c))
}

fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
    (prop::sample::select(vec![-1i64, 1]), prop::collection::vec(-9i64..9, 0..=ORDER))
        .prop_map(|(c0, rest)| TruncatedSeries::from_coeffs(ORDER, std::iter::once(c0).chain(rest)))
}

fn family() -> impl Strategy<Value = ConstraintFamily> {
    prop::sample::select(ConstraintFamily::BIJECTIVE.to_vec())
}

fn triple(family: ConstraintFamily) -> impl Strategy<Value = (BaseVariant, Triple)> {
    let step = family.pair_rule().unwrap().step();
    let variants = if family.anchor_part().is_some() {
        vec![BaseVariant::Plain, BaseVariant::Anchored]
    } else {
        vec![BaseVariant::Plain]
    };
    (
        prop::sample::select(variants),
        prop::collection::vec(0u32..25, 0..5),
        prop::collection::vec(0u32..8, 0..5),
    )
        .prop_map(move |(v, mu, eta)| (v, Triple::new(mu, eta.into_iter().map(|e| e * step).collect())))
}

fn family_partition() -> impl Strategy<Value = (ConstraintFamily, Partition)> {
    (family(), 0u64..=30, any::<prop::sample::Index>()).prop_filter_map("no partitions", |(f, n, i)| {
        let ps = enumerate(f, n);
        (!ps.is_empty()).then(|| (f, ps[i.index(ps.len())].clone()))
    })
}

proptest! {
    #[test]
    fn ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &TruncatedSeries::one(ORDER), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn invert_is_two_sided(u in unit_series()) {
        let inv = u.invert().unwrap();
        prop_assert_eq!(&u * &inv, TruncatedSeries::one(ORDER));
        prop_assert_eq!(&inv * &u, TruncatedSeries::one(ORDER));
    }

    #[test]
    fn division_undoes_multiplication(a in series(), u in unit_series()) {
        prop_assert_eq!((&a * &u).div(&u).unwrap(), a);
    }

    #[test]
    fn binomial_mul_div_roundtrip(a in series(), e in 1usize..30, plus in any::<bool>()) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let mut b = a.clone();
        b.mul_binomial(sign, e);
        b.div_binomial(sign, e);
        prop_assert_eq!(b, a);
    }

    #[test]
    fn infinite_pochhammer_is_stable(j in 1usize..6, d in 1usize..6, extra in 0usize..20) {
        let order = 30;
        let inf = pochhammer_infinite(Sign::Plus, j, d, order).unwrap();
        let n = order / d + 1 + extra;
        prop_assert_eq!(&inf, &pochhammer_finite(Sign::Plus, j, d, n, order));
        prop_assert_eq!(pochhammer_infinite(Sign::Plus, j, d, order + 10).unwrap().truncate(order), inf);
    }

    #[test]
    fn forward_then_backward_is_identity((f, (v, t)) in family().prop_flat_map(|f| (Just(f), triple(f)))) {
        let (p, trace) = forward_map(f, &t, v).unwrap();
        prop_assert!(satisfies(f, &p), "{} violates {}", p, f);
        prop_assert!(trace.check().is_ok());
        let (back, bv, btrace) = backward_map(f, &p).unwrap();
        prop_assert!(btrace.check().is_ok());
        prop_assert_eq!(back, t);
        prop_assert_eq!(bv, v);
    }

    #[test]
    fn backward_then_forward_is_identity((f, p) in family_partition()) {
        let (t, v, _) = backward_map(f, &p).unwrap();
        prop_assert_eq!(t.weight() + pil_core::bijection::base_of(f, &t, v).unwrap().weight(), p.weight());
        let (q, _) = forward_map(f, &t, v).unwrap();
        prop_assert_eq!(q, p);
    }

    #[test]
    fn decomposition_text_roundtrips((f, p) in family_partition(), fwd in any::<bool>()) {
        let dir = if fwd { Direction::Forward } else { Direction::Backward };
        let pp = decompose(f, &p, dir).unwrap();
        let text = pp.to_string();
        prop_assert_eq!(PairedPartition::parse(&text, f, dir).unwrap(), pp.clone());
        prop_assert_eq!(PairedPartition::parse(&p.to_string(), f, dir).unwrap(), pp.clone());
        prop_assert_eq!(pp.to_partition(), p);
    }

    #[test]
    fn partition_text_roundtrips(parts in prop::collection::vec(1u32..100, 0..10)) {
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }
}
