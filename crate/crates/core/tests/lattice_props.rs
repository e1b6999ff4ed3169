mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use dearr::generate::{random_arrangement, HyperplaneParams};
use dearr::poset::{euler_characteristic, f_vectors_agree};
use dearr::{f_from_mobius, RationalArrangement, Semilattice};
use num_bigint::BigInt;
use proptest::prelude::*;

fn random(dim: usize, count: usize, seed: u64) -> RationalArrangement {
    random_arrangement(HyperplaneParams { dim, count, bound: 3, seed }).unwrap()
}

/// Ranked poset signature keyed by support sets.
fn signature(l: &Semilattice) -> (usize, BTreeSet<(usize, BTreeSet<usize>)>, BTreeSet<(BTreeSet<usize>, BTreeSet<usize>)>) {
    let flats = l.flats().iter().map(|f| (l.rank(f.id), f.support.clone())).collect();
    let order = l
        .ids()
        .flat_map(|x| l.upper(x).map(move |y| (x, y)))
        .map(|(x, y)| (l.flats()[x.0].support.clone(), l.flats()[y.0].support.clone()))
        .collect();
    (l.ambient_dim(), flats, order)
}

fn check_mobius_recursion(l: &Semilattice) {
    for x in l.ids() {
        for y in l.upper(x) {
            let sum: i64 = l.ids().filter(|&z| l.leq(x, z) && l.leq(z, y)).map(|z| l.mobius(x, z).unwrap()).sum();
            assert_eq!(sum, if x == y { 1 } else { 0 }, "interval [{x}, {y}]");
        }
    }
}

#[test]
fn frozen_lattices() {
    let l = generic3().build_lattice();
    assert_eq!(l.len(), 7);
    assert_eq!(l.mobius_polynomial().to_string(), "3x^2 + 3xy + y^2 - 6x - 3y + 3");
    let l = concurrent3().build_lattice();
    assert_eq!(l.len(), 5);
    assert_eq!(l.mobius(l.minimum(), dearr::FlatId(4)).unwrap(), 2);
    assert_eq!(l.chamber_count(), 6);
}

#[test]
fn geometric_invariants() {
    for seed in 0..30 {
        let dim = 2 + (seed as usize % 2);
        let a = random(dim, 2 + (seed as usize % 5), seed);
        let g = a.geometric_lattice();
        let l = &g.lattice;

        let systems: HashSet<_> = g.flats.iter().map(|f| f.system().clone()).collect();
        assert_eq!(systems.len(), g.flats.len(), "duplicate flat");

        for (id, flat) in l.ids().zip(&g.flats) {
            let (base, _) = flat.parametrization();
            for (i, h) in a.hyperplanes().iter().enumerate() {
                let contains = flat.support().contains(&i);
                // A hyperplane contains the flat iff its row is in the row space.
                let on = h.side(&base) == std::cmp::Ordering::Equal;
                if contains {
                    assert!(on);
                }
                let mut with_h = flat.support().clone();
                with_h.insert(i);
                let same = a.intersect(with_h.iter().copied()).is_some_and(|f| f.system() == flat.system());
                assert_eq!(contains, same, "support maximality, seed {seed}");
            }
            assert_eq!(l.dim(id), flat.dim());
        }
        for x in l.ids() {
            for y in l.upper(x) {
                if x != y {
                    assert!(l.dim(x) > l.dim(y));
                    assert!(g.flat(x).contains(g.flat(y)));
                }
            }
        }
    }
}

#[test]
fn restriction_matches_upper_set() {
    for seed in 0..25 {
        let a = random(3, 2 + (seed as usize % 4), seed);
        let g = a.geometric_lattice();
        for x in g.lattice.ids() {
            let by_geometry = a.restrict(g.flat(x)).unwrap();
            let by_order = g.lattice.upper_set(x).unwrap();
            assert_eq!(signature(&by_geometry), signature(&by_order), "seed {seed}, flat {x}");
            assert_eq!(by_geometry.mobius_polynomial(), by_order.mobius_polynomial());
        }
    }
}

#[test]
fn theorem_side_consistency() {
    for seed in 0..40 {
        let dim = 1 + (seed as usize % 3);
        let a = random(dim, seed as usize % 6, seed);
        let l = a.build_lattice();
        check_mobius_recursion(&l);
        let f = f_from_mobius(&l.mobius_polynomial(), l.arrangement_rank()).unwrap();
        let fv = l.f_vector();
        assert!(f_vectors_agree(&f, dim, &fv));
        assert_eq!(*fv.last().unwrap(), l.chamber_count());
        let expected = if dim % 2 == 0 { 1 } else { -1 };
        assert_eq!(euler_characteristic(&fv), expected);
        if l.arrangement_rank() > 0 {
            let k = l.atoms().len() as i64;
            assert_eq!(l.mobius_polynomial().coeff(0, l.arrangement_rank() as u32 - 1), BigInt::from(-k));
        }
    }
}

#[test]
fn parallel_lines_rank_one() {
    let a = arrangement(2, &[(&[1, 0], 0), (&[1, 0], 1), (&[1, 0], 2)]);
    let l = a.build_lattice();
    assert_eq!(l.arrangement_rank(), 1);
    assert_eq!(l.mobius_polynomial().to_string(), "3x + y - 3");
    assert_eq!(l.f_polynomial().unwrap().to_string(), "3x + 4");
    assert_eq!(l.f_vector(), vec![0, 3, 4]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn upper_set_sub_sums(a in planar_arrangement(5)) {
        let l = a.build_lattice();
        let table = l.mobius_table();
        for x in l.ids() {
            let sub = l.upper_set(x).unwrap();
            let sub_table = sub.mobius_table();
            let mut ours: Vec<i64> = table.row(x).iter().map(|&(_, m)| m).collect();
            let mut theirs: Vec<i64> = sub_table.row(sub.minimum()).iter().map(|&(_, m)| m).collect();
            ours.sort();
            theirs.sort();
            prop_assert_eq!(ours, theirs);
        }
    }

    #[test]
    fn mobius_interval_sums_vanish(a in planar_arrangement(6)) {
        check_mobius_recursion(&a.build_lattice());
    }
}
