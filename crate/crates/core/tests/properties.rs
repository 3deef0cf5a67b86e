use bufrob_core::buffered::{conjugate, enumerate_reps, full_conjugate, full_rank, jigsaw, rank_vector, RepKind};
use bufrob_core::frobenius::{
    f1_to_overpartition, f2_to_overpartition, js2_inverse, js2_map, js_inverse, js_map, overpartition_to_f1,
    overpartition_to_f2,
};
use bufrob_core::qseries::{inverse_pochhammer, pochhammer, Cyclotomic, Laurent, Ring, Series};
use bufrob_core::stats;
use bufrob_core::{Overpartition, Part, Partition};
use proptest::prelude::*;

/// Overpartitions with parts at most `max` and at most `len` parts.
fn overpartition(max: u32, len: usize) -> impl Strategy<Value = Overpartition> {
    prop::collection::vec((1..=max, any::<bool>()), 0..=len).prop_map(|raw| {
        let mut values: Vec<u32> = raw.iter().map(|&(v, _)| v).collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts = Vec::new();
        for (i, &v) in values.iter().enumerate() {
            let first = i == 0 || values[i - 1] != v;
            let wants = raw.iter().any(|&(x, o)| x == v && o);
            parts.push(Part { value: v, overlined: first && wants });
        }
        Overpartition::new(parts).unwrap()
    })
}

fn partition(max: u32, len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max, 0..=len).prop_map(Partition::from_unsorted)
}

fn series(order: usize) -> impl Strategy<Value = Series<i64>> {
    prop::collection::vec(-5i64..=5, order + 1).prop_map(move |c| Series::from_coeffs(c, order))
}

proptest! {
    #[test]
    fn text_form_round_trips(p in overpartition(12, 8)) {
        let back: Overpartition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn conjugation_is_an_involution(p in overpartition(10, 8)) {
        let c = p.conjugate().unwrap();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.num_overlined(), p.num_overlined());
        prop_assert_eq!(c.conjugate().unwrap(), p.clone());
        if !p.is_empty() {
            prop_assert_eq!(stats::dyson_rank_over(&c).unwrap(), -stats::dyson_rank_over(&p).unwrap());
        }
    }

    #[test]
    fn first_map_round_trips(p in overpartition(8, 6)) {
        let s = overpartition_to_f1(&p).unwrap();
        prop_assert!(s.is_valid());
        prop_assert_eq!(s.weight(), p.weight());
        prop_assert_eq!(f1_to_overpartition(&s).unwrap(), p);
    }

    #[test]
    fn second_map_round_trips(p in overpartition(8, 6)) {
        let s = overpartition_to_f2(&p).unwrap();
        prop_assert!(s.is_valid());
        prop_assert_eq!(s.weight(), p.weight());
        prop_assert_eq!(f2_to_overpartition(&s).unwrap(), p);
    }

    #[test]
    fn joichi_stanton_round_trips(p in overpartition(10, 7)) {
        let (base, marks) = js_inverse(&p).unwrap();
        prop_assert_eq!(base.len(), p.len());
        prop_assert!(marks.is_distinct());
        prop_assert_eq!(js_map(&base, &marks).unwrap(), p);
    }

    #[test]
    fn parity_map_round_trips(p in partition(12, 7)) {
        let repeats_odd = p.parts().windows(2).any(|w| w[0] == w[1] && w[0] % 2 == 1);
        match js2_inverse(&p) {
            Ok((base, marks)) => {
                prop_assert!(!repeats_odd);
                prop_assert!(base.parts().iter().all(|v| v % 2 == 0));
                prop_assert_eq!(js2_map(&base, &marks).unwrap(), p);
            }
            Err(_) => prop_assert!(repeats_odd),
        }
    }

    #[test]
    fn series_ring_laws(a in series(8), b in series(8), c in series(8)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn unit_series_invert(mut a in series(10), neg in any::<bool>()) {
        a = Series::from_coeffs(
            std::iter::once(if neg { -1 } else { 1 }).chain(a.coeffs()[1..].iter().copied()).collect(),
            10,
        );
        prop_assert_eq!(&a * &a.inverse().unwrap(), Series::one(10));
    }

    #[test]
    fn pochhammer_inverts(c in -3i64..=3, shift in 1usize..4, base in 1usize..3, len in 0usize..6) {
        let p = pochhammer(&c, shift, base, Some(len), 12).unwrap();
        let q = inverse_pochhammer(&c, shift, base, Some(len), 12).unwrap();
        prop_assert_eq!(&p * &q, Series::one(12));
    }

    #[test]
    fn roots_of_unity_are_units(k in 1u32..=12, e in -30i64..=30) {
        let z = Cyclotomic::zeta_pow(k, e);
        prop_assert!(z.times(&Cyclotomic::zeta_pow(k, -e)).is_one());
        prop_assert_eq!(z.clone(), Cyclotomic::zeta_pow(k, e + k as i64));
        prop_assert_eq!(z.try_inverse().unwrap(), Cyclotomic::zeta_pow(k, -e));
    }

    #[test]
    fn laurent_products_commute(e1 in prop::collection::vec(-3i32..=3, 3), e2 in prop::collection::vec(-3i32..=3, 3), c in -4i64..=4) {
        let a = Laurent::monomial(c, e1.clone()).plus(&Laurent::constant(1));
        let b = Laurent::monomial(2, e2);
        prop_assert_eq!(a.times(&b), b.times(&a));
        let m = Laurent::<i64>::monomial(1, e1);
        prop_assert!(m.times(&m.try_inverse().unwrap()).is_one());
    }

    #[test]
    fn buffered_conjugations(n in 0u64..=6, pick in any::<prop::sample::Index>(), b2 in any::<bool>()) {
        let kind = if b2 { RepKind::B2 } else { RepKind::B1 };
        let reps = enumerate_reps(n, 3, kind).unwrap();
        let v = &reps[pick.index(reps.len())];
        let rv = rank_vector(v).unwrap();
        for i in 1..=4 {
            let c = conjugate(v, i).unwrap();
            prop_assert!(c.is_valid());
            prop_assert_eq!(c.weight(), v.weight());
            prop_assert_eq!(&conjugate(&c, i).unwrap(), v);
            let rc = rank_vector(&c).unwrap();
            for j in 1..=3 {
                let want = if j == i { -rv.component(j) } else { rv.component(j) };
                prop_assert_eq!(rc.component(j), want);
            }
        }
        let f = full_conjugate(v).unwrap();
        prop_assert_eq!(full_rank(&f).unwrap(), -full_rank(v).unwrap());
        let s = jigsaw(v).unwrap();
        prop_assert!(s.is_valid());
        prop_assert_eq!(s.weight(), n);
    }
}
