use std::cmp::Ordering;

use num_bigint::BigUint;
use proptest::prelude::*;

use pncoef::bijections::{
    ballot_to_monomial, ballot_to_tree, monomial_to_ballot, monomial_to_choices, tree_to_ballot,
    ChoiceSeq,
};
use pncoef::cli::output::{parse, parse_bfile, Format, OutputRecord, Row, TextLayout};
use pncoef::coefficient::{coefficient, coefficient_closed_form};
use pncoef::maxsearch::{smooth_transform, swap_transform};
use pncoef::partition::Partition;
use pncoef::{compare, is_member, Monomial};

/// A random member of A_n: the value multiset of a random choice sequence.
fn monomial(max_n: usize) -> impl Strategy<Value = Monomial> {
    (1..=max_n)
        .prop_flat_map(|n| (1..=n as u32).map(|k| 1..=k).collect::<Vec<_>>())
        .prop_map(|idx| {
            let v = ChoiceSeq::new(idx).unwrap().exponents();
            Monomial::new(v).unwrap()
        })
}

fn same_length_triple(max_n: usize) -> impl Strategy<Value = (Monomial, Monomial, Monomial)> {
    (1..=max_n).prop_flat_map(|n| (monomial_of(n), monomial_of(n), monomial_of(n)))
}

fn monomial_of(n: usize) -> impl Strategy<Value = Monomial> {
    (1..=n as u32)
        .map(|k| 1..=k)
        .collect::<Vec<_>>()
        .prop_map(|idx| Monomial::new(ChoiceSeq::new(idx).unwrap().exponents()).unwrap())
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..30, 0..20).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn big() -> impl Strategy<Value = BigUint> {
    prop::collection::vec(any::<u32>(), 0..6).prop_map(BigUint::new)
}

fn row() -> impl Strategy<Value = Row> {
    (
        0usize..10_000,
        big(),
        prop::option::of(monomial(12)),
        prop::option::of((1u64..1000, 1u64..1000)),
    )
        .prop_map(|(i, v, a, q)| {
            let mut r = Row::new(i, v);
            if let Some(a) = a {
                r = r.with_monomial(a);
            }
            if let Some((p, d)) = q {
                r = r.with_quotient(if d == 1 {
                    p.to_string()
                } else {
                    format!("{p}/{d}")
                });
            }
            r
        })
}

proptest! {
    #[test]
    fn order_is_strict_total((a, b, c) in same_length_triple(12)) {
        let ab = compare(&a, &b).unwrap();
        let ba = compare(&b, &a).unwrap();
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = compare(&b, &c).unwrap();
        if ab == Ordering::Less && bc == Ordering::Less {
            prop_assert_eq!(compare(&a, &c).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn coefficient_routes_agree(a in monomial(40)) {
        prop_assert_eq!(coefficient(&a), coefficient_closed_form(&a));
    }

    #[test]
    fn bijections_round_trip(a in monomial(40)) {
        let b = monomial_to_ballot(&a);
        prop_assert_eq!(&ballot_to_monomial(&b), &a);
        let t = ballot_to_tree(&b);
        prop_assert_eq!(t.num_vertices(), a.len() + 1);
        prop_assert_eq!(tree_to_ballot(&t).unwrap(), b);
        let ch = monomial_to_choices(&a);
        prop_assert_eq!(ch.exponents(), a.exponents().to_vec());
    }

    #[test]
    fn transforms_do_not_decrease(a in monomial(30)) {
        let c = coefficient(&a);
        let v = a.exponents();
        for i in 1..a.len() {
            if v[i - 1] < v[i] {
                let b = swap_transform(&a, i).unwrap();
                prop_assert!(is_member(b.exponents()));
                prop_assert!(coefficient(&b) > c);
            }
            if v[i - 1] > v[i] + 1 {
                prop_assert!(coefficient(&smooth_transform(&a, i).unwrap()) >= c);
            }
        }
    }

    #[test]
    fn conjugate_is_involution(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.total(), p.total());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn bfile_round_trips(rows in prop::collection::vec(row(), 0..20)) {
        let bare: Vec<Row> = rows.iter().map(|r| Row::new(r.index, r.value.clone())).collect();
        let rec = OutputRecord::new(rows, TextLayout::Rows);
        prop_assert_eq!(parse_bfile(&rec.render(Format::Bfile)).unwrap(), bare);
    }

    #[test]
    fn formats_carry_identical_payloads(rows in prop::collection::vec(row(), 0..20)) {
        let rec = OutputRecord::new(rows, TextLayout::Rows);
        for f in [Format::Text, Format::Json, Format::Csv] {
            let back = parse(f, TextLayout::Rows, &rec.render(f)).unwrap();
            prop_assert_eq!(&back, &rec.rows, "{:?}", f);
        }
    }
}
