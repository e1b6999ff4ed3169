#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

use dearr::{Rational, RationalArrangement, Sign, SignVector};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn arrangement(n: usize, rows: &[(&[i64], i64)]) -> RationalArrangement {
    RationalArrangement::from_integers(n, rows).unwrap()
}

pub fn axes() -> RationalArrangement {
    arrangement(2, &[(&[1, 0], 0), (&[0, 1], 0)])
}

pub fn concurrent3() -> RationalArrangement {
    arrangement(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, -1], 0)])
}

pub fn generic3() -> RationalArrangement {
    arrangement(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)])
}

/// `m` lines in general position: tangents `x·k + y = k²` to a parabola.
pub fn generic_lines(m: usize) -> RationalArrangement {
    let rows: Vec<(Vec<i64>, i64)> = (1..=m as i64).map(|k| (vec![2 * k, -1], k * k)).collect();
    let rows: Vec<(&[i64], i64)> = rows.iter().map(|(n, o)| (n.as_slice(), *o)).collect();
    arrangement(2, &rows)
}

pub fn binomial2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// Random integer arrangements in the plane, duplicates removed.
pub fn planar_arrangement(max_lines: usize) -> impl Strategy<Value = RationalArrangement> {
    prop::collection::vec(((-4i64..=4), (-4i64..=4), (-4i64..=4)), 0..=max_lines).prop_map(|rows| {
        let mut hs: Vec<dearr::RationalHyperplane> = Vec::new();
        for (a, b, c) in rows {
            if a == 0 && b == 0 {
                continue;
            }
            let h = dearr::Hyperplane::from_integers(&[a, b], c).unwrap();
            if !hs.contains(&h) {
                hs.push(h);
            }
        }
        RationalArrangement::new(2, hs).unwrap()
    })
}

/// Independent face oracle for line arrangements: evaluates sign vectors on
/// a point set that meets every face. Vertices are pairwise intersections;
/// every edge contains a sample strictly between consecutive vertices (or
/// beyond the extreme ones); every region borders an edge and contains a
/// point pushed off that edge sample by less than the distance to any other
/// line. Returns sign vector -> dimension.
pub fn planar_face_oracle(a: &RationalArrangement) -> BTreeMap<SignVector, usize> {
    assert_eq!(a.ambient_dim(), 2);
    let lines: Vec<(Rational, Rational, Rational)> = a
        .hyperplanes()
        .iter()
        .map(|h| (h.normal()[0].clone(), h.normal()[1].clone(), h.offset().clone()))
        .collect();
    let signs_at = |x: &Rational, y: &Rational| {
        SignVector(
            lines
                .iter()
                .map(|(p, r, c)| match (p * x + r * y - c).cmp(&Rational::zero()) {
                    Ordering::Equal => Sign::Zero,
                    Ordering::Greater => Sign::Plus,
                    Ordering::Less => Sign::Minus,
                })
                .collect(),
        )
    };
    let mut out = BTreeMap::new();
    let mut record = |sv: SignVector, dim: usize| {
        let prev = out.insert(sv.clone(), dim);
        assert!(prev.is_none() || prev == Some(dim), "{sv} seen with two dimensions");
    };
    if lines.is_empty() {
        record(signs_at(&q(0), &q(0)), 2);
        return out;
    }
    for i in 0..lines.len() {
        let (ai, bi, ci) = &lines[i];
        let base = if !ai.is_zero() { (ci / ai, q(0)) } else { (q(0), ci / bi) };
        let dir = (-bi.clone(), ai.clone());
        let mut ts: Vec<Rational> = Vec::new();
        for (j, (aj, bj, cj)) in lines.iter().enumerate() {
            if j == i {
                continue;
            }
            let det = ai * bj - aj * bi;
            if det.is_zero() {
                continue;
            }
            let x = (ci * bj - cj * bi) / &det;
            let y = (ai * cj - aj * ci) / &det;
            record(signs_at(&x, &y), 0);
            let t = (&dir.0 * (&x - &base.0) + &dir.1 * (&y - &base.1)) / (&dir.0 * &dir.0 + &dir.1 * &dir.1);
            ts.push(t);
        }
        ts.sort();
        ts.dedup();
        let samples: Vec<Rational> = if ts.is_empty() {
            vec![q(0)]
        } else {
            let mut s = vec![&ts[0] - Rational::one()];
            s.extend(ts.windows(2).map(|w| (&w[0] + &w[1]) / q(2)));
            s.push(ts.last().unwrap() + Rational::one());
            s
        };
        for t in samples {
            let px = &base.0 + &t * &dir.0;
            let py = &base.1 + &t * &dir.1;
            record(signs_at(&px, &py), 1);
            let mut eps = Rational::one();
            for (aj, bj, cj) in &lines {
                let v = (aj * &px + bj * &py - cj).abs();
                let rate = (aj * ai + bj * bi).abs();
                if !v.is_zero() && !rate.is_zero() {
                    eps = eps.min(v / rate);
                }
            }
            eps /= q(2);
            for s in [1, -1] {
                let x = &px + &eps * ai * q(s);
                let y = &py + &eps * bi * q(s);
                record(signs_at(&x, &y), 2);
            }
        }
    }
    out
}
