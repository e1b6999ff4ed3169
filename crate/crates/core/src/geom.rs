//! Affine hyperplane arrangements over an exact field.
//!
//! Flats are stored as canonical reduced row-echelon systems, so two flats
//! are the same point set exactly when their systems are identical.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::linalg::{reduce_against, rref, Matrix};
use crate::poset::{Flat, FlatId, Semilattice};
use crate::scalar::Scalar;

/// The affine hyperplane `{x : normal · x = offset}`.
///
/// The normal is scaled so its first nonzero entry is 1; the positive side is
/// `normal · x > offset` in that scaling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane<S> {
    normal: Vec<S>,
    offset: S,
}

impl<S: Scalar> Hyperplane<S> {
    pub fn new(normal: Vec<S>, offset: S) -> Result<Self> {
        let Some(lead) = normal.iter().find(|v| !v.is_zero()).cloned() else {
            return Err(Error::ZeroNormal(0));
        };
        Ok(Hyperplane {
            normal: normal.into_iter().map(|v| v / lead.clone()).collect(),
            offset: offset / lead,
        })
    }

    pub fn from_integers(normal: &[i64], offset: i64) -> Result<Self> {
        Self::new(normal.iter().map(|&v| S::from_integer(v)).collect(), S::from_integer(offset))
    }

    pub fn normal(&self) -> &[S] {
        &self.normal
    }

    pub fn offset(&self) -> &S {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal · point - offset`.
    pub fn evaluate(&self, point: &[S]) -> S {
        self.normal
            .iter()
            .zip(point)
            .fold(-self.offset.clone(), |acc, (a, x)| acc + a.clone() * x.clone())
    }

    /// Which side of the hyperplane `point` lies on; `Equal` means on it.
    pub fn side(&self, point: &[S]) -> Ordering {
        self.evaluate(point).cmp(&S::zero())
    }

    /// `[normal | offset]`.
    pub fn augmented_row(&self) -> Vec<S> {
        let mut row = self.normal.clone();
        row.push(self.offset.clone());
        row
    }
}

/// A finite set of distinct hyperplanes in `R^n`, kept in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement<S> {
    ambient_dim: usize,
    hyperplanes: Vec<Hyperplane<S>>,
}

impl<S: Scalar> Arrangement<S> {
    pub fn new(ambient_dim: usize, hyperplanes: Vec<Hyperplane<S>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroAmbientDimension);
        }
        let mut seen: HashMap<&Hyperplane<S>, usize> = HashMap::new();
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: h.dim() });
            }
            if let Some(&first) = seen.get(h) {
                return Err(Error::DuplicateHyperplane { first, second: i });
            }
            seen.insert(h, i);
        }
        Ok(Arrangement { ambient_dim, hyperplanes })
    }

    /// Convenience constructor from integer `(normal, offset)` pairs.
    pub fn from_integers(ambient_dim: usize, rows: &[(&[i64], i64)]) -> Result<Self> {
        let hyperplanes = rows
            .iter()
            .enumerate()
            .map(|(i, (normal, offset))| {
                Hyperplane::from_integers(normal, *offset).map_err(|_| Error::ZeroNormal(i))
            })
            .collect::<Result<_>>()?;
        Self::new(ambient_dim, hyperplanes)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane<S>] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// The whole space as a flat.
    pub fn ambient_flat(&self) -> AffineFlat<S> {
        AffineFlat {
            system: Matrix::new(self.ambient_dim + 1, Vec::new()),
            dim: self.ambient_dim,
            support: BTreeSet::new(),
        }
    }

    /// Intersection of the hyperplanes in `support`, or `None` if empty.
    ///
    /// The returned flat carries its maximal support: every hyperplane
    /// containing it, not only the ones requested.
    pub fn intersect(&self, support: impl IntoIterator<Item = usize>) -> Option<AffineFlat<S>> {
        let mut flat = self.solve(support)?;
        flat.support = (0..self.len())
            .filter(|&i| {
                reduce_against(&flat.system, &self.hyperplanes[i].augmented_row())
                    .iter()
                    .all(|v| v.is_zero())
            })
            .collect();
        Some(flat)
    }

    /// Like [`Arrangement::intersect`], but the support is left as given.
    pub(crate) fn solve(&self, support: impl IntoIterator<Item = usize>) -> Option<AffineFlat<S>> {
        let support: BTreeSet<usize> = support.into_iter().collect();
        let rows = support.iter().map(|&i| self.hyperplanes[i].augmented_row()).collect();
        let (echelon, rank) = rref(&Matrix::new(self.ambient_dim + 1, rows));
        let system = echelon.without_zero_rows();
        if system.pivots().iter().any(|&p| p == Some(self.ambient_dim)) {
            return None;
        }
        Some(AffineFlat { system, dim: self.ambient_dim - rank, support })
    }

    /// The intersection semilattice.
    pub fn build_lattice(&self) -> Semilattice {
        self.geometric_lattice().lattice
    }

    /// The intersection semilattice together with the affine flat behind
    /// each element.
    pub fn geometric_lattice(&self) -> GeometricLattice<S> {
        self.saturate(self.ambient_flat())
    }

    /// All flats contained in `root`, found level by level: each flat is
    /// intersected with every hyperplane not containing it, and results are
    /// deduplicated by their canonical system.
    fn saturate(&self, root: AffineFlat<S>) -> GeometricLattice<S> {
        let mut found: Vec<AffineFlat<S>> = vec![root];
        let mut index: HashMap<Matrix<S>, usize> = HashMap::new();
        index.insert(found[0].system.clone(), 0);
        let mut next = 0;
        while next < found.len() {
            let base = found[next].support.clone();
            next += 1;
            for h in 0..self.len() {
                if base.contains(&h) {
                    continue;
                }
                let Some(flat) = self.intersect(base.iter().copied().chain([h])) else {
                    continue;
                };
                if !index.contains_key(&flat.system) {
                    index.insert(flat.system.clone(), found.len());
                    found.push(flat);
                }
            }
        }

        let root_dim = found[0].dim;
        found.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.support.cmp(&b.support)));
        let lattice_flats = found.iter().map(|f| Flat::new(f.dim, f.support.iter().copied())).collect();
        let mut pairs = Vec::new();
        for (i, x) in found.iter().enumerate() {
            for (j, y) in found.iter().enumerate() {
                if x.support.is_subset(&y.support) {
                    debug_assert!(x.contains(y), "support order disagrees with containment");
                    pairs.push((FlatId(i), FlatId(j)));
                }
            }
        }
        let lattice = Semilattice::new(root_dim, lattice_flats, pairs)
            .expect("flats of an arrangement form a semilattice");
        GeometricLattice { lattice, flats: found }
    }

    /// The arrangement induced on the flat `x` by the hyperplanes not
    /// containing it, written in the coordinates of a parametrization of `x`.
    pub fn restriction(&self, x: &AffineFlat<S>) -> Result<Restriction<S>> {
        if x.ambient_dim() != self.ambient_dim || x.support.iter().any(|&i| i >= self.len()) {
            return Err(Error::FlatNotInLattice);
        }
        match self.intersect(x.support.iter().copied()) {
            Some(ref check) if check == x => {}
            _ => return Err(Error::FlatNotInLattice),
        }
        let (base, directions) = x.parametrization();
        let mut restricted: BTreeMap<Hyperplane<S>, BTreeSet<usize>> = BTreeMap::new();
        let mut order: Vec<Hyperplane<S>> = Vec::new();
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if x.support.contains(&i) {
                continue;
            }
            let normal: Vec<S> = directions
                .iter()
                .map(|d| d.iter().zip(h.normal()).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
                .collect();
            let offset = -h.evaluate(&base);
            // A zero normal here means h is parallel to x and misses it.
            let Ok(r) = Hyperplane::new(normal, offset) else {
                continue;
            };
            if !restricted.contains_key(&r) {
                order.push(r.clone());
            }
            restricted.entry(r).or_default().insert(i);
        }
        let origins = order.iter().map(|r| restricted[r].clone()).collect();
        let arrangement = if x.dim == 0 {
            None
        } else {
            Some(Arrangement::new(x.dim, order).expect("restricted hyperplanes are distinct"))
        };
        Ok(Restriction { flat: x.clone(), arrangement, origins })
    }

    /// The intersection semilattice of the restriction to `x`, with supports
    /// expressed as hyperplane indices of `self`.
    pub fn restrict(&self, x: &AffineFlat<S>) -> Result<Semilattice> {
        Ok(self.restriction(x)?.lattice())
    }
}

/// An affine flat given by its canonical equation system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineFlat<S> {
    /// Nonzero rows of the reduced row-echelon form of `[A | b]`.
    system: Matrix<S>,
    dim: usize,
    support: BTreeSet<usize>,
}

impl<S: Scalar> AffineFlat<S> {
    pub fn system(&self) -> &Matrix<S> {
        &self.system
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn ambient_dim(&self) -> usize {
        self.system.ncols() - 1
    }

    /// `other ⊆ self`, decided from the equation systems alone.
    pub fn contains(&self, other: &AffineFlat<S>) -> bool {
        self.system
            .rows()
            .iter()
            .all(|row| reduce_against(&other.system, row).iter().all(|v| v.is_zero()))
    }

    pub fn contains_point(&self, point: &[S]) -> bool {
        self.system.rows().iter().all(|row| {
            let (coeffs, rhs) = row.split_at(row.len() - 1);
            let lhs = coeffs.iter().zip(point).fold(S::zero(), |acc, (a, x)| acc + a.clone() * x.clone());
            lhs == rhs[0]
        })
    }

    /// A point `base` and direction vectors `d_1..d_k` (`k = dim`) with
    /// `flat = { base + Σ t_j d_j }`. Free coordinates are the non-pivot
    /// columns of the canonical system.
    pub fn parametrization(&self) -> (Vec<S>, Vec<Vec<S>>) {
        let n = self.ambient_dim();
        let pivots: Vec<usize> = self.system.pivots().into_iter().flatten().collect();
        let mut base = vec![S::zero(); n];
        for (row, &p) in self.system.rows().iter().zip(&pivots) {
            base[p] = row[n].clone();
        }
        let free = (0..n).filter(|c| !pivots.contains(c));
        let directions = free
            .map(|f| {
                let mut d = vec![S::zero(); n];
                d[f] = S::one();
                for (row, &p) in self.system.rows().iter().zip(&pivots) {
                    d[p] = -row[f].clone();
                }
                d
            })
            .collect();
        (base, directions)
    }
}

/// Intersection semilattice with the affine flat behind each id.
#[derive(Debug, Clone)]
pub struct GeometricLattice<S> {
    pub lattice: Semilattice,
    pub flats: Vec<AffineFlat<S>>,
}

impl<S: Scalar> GeometricLattice<S> {
    pub fn flat(&self, id: FlatId) -> &AffineFlat<S> {
        &self.flats[id.0]
    }

    /// The flat whose maximal support is exactly `support`.
    pub fn by_support(&self, support: &BTreeSet<usize>) -> Option<FlatId> {
        self.flats.iter().position(|f| &f.support == support).map(FlatId)
    }

    /// Support-indexed lookup table.
    pub fn support_index(&self) -> HashMap<BTreeSet<usize>, FlatId> {
        self.flats.iter().enumerate().map(|(i, f)| (f.support.clone(), FlatId(i))).collect()
    }
}

/// The arrangement `A^X` induced on a flat `X`.
#[derive(Debug, Clone)]
pub struct Restriction<S> {
    pub flat: AffineFlat<S>,
    /// `None` when `X` is a point.
    pub arrangement: Option<Arrangement<S>>,
    /// For each restricted hyperplane, the original hyperplanes cutting it out.
    pub origins: Vec<BTreeSet<usize>>,
}

impl<S: Scalar> Restriction<S> {
    /// Semilattice of the restriction with supports mapped back to the
    /// original arrangement.
    pub fn lattice(&self) -> Semilattice {
        let Some(arrangement) = &self.arrangement else {
            return Semilattice::new(0, vec![Flat::new(0, self.flat.support.iter().copied())], [])
                .expect("a single flat is a semilattice");
        };
        let inner = arrangement.build_lattice();
        let flats = inner
            .flats()
            .iter()
            .map(|f| {
                let mut support = self.flat.support.clone();
                for &r in &f.support {
                    support.extend(&self.origins[r]);
                }
                Flat::new(f.dim, support)
            })
            .collect();
        let pairs: Vec<_> = inner.ids().flat_map(|x| inner.upper(x).map(move |y| (x, y))).collect();
        Semilattice::new(inner.ambient_dim(), flats, pairs).expect("relabeling keeps the order")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type A = Arrangement<Rational>;

    fn axes() -> A {
        A::from_integers(2, &[(&[1, 0], 0), (&[0, 1], 0)]).unwrap()
    }

    fn generic3() -> A {
        A::from_integers(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)]).unwrap()
    }

    fn concurrent() -> A {
        A::from_integers(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, -1], 0)]).unwrap()
    }

    #[test]
    fn canonical_form() {
        let h = Hyperplane::<Rational>::from_integers(&[0, -2, 4], 6).unwrap();
        assert_eq!(h, Hyperplane::from_integers(&[0, 1, -2], -3).unwrap());
        assert_eq!(Hyperplane::<Rational>::from_integers(&[0, 0], 1), Err(Error::ZeroNormal(0)));
    }

    #[test]
    fn duplicates_rejected() {
        let err = A::from_integers(2, &[(&[1, 1], 1), (&[2, 2], 2)]).unwrap_err();
        assert_eq!(err, Error::DuplicateHyperplane { first: 0, second: 1 });
        let err = A::from_integers(2, &[(&[1, 1, 0], 1)]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
        assert_eq!(A::new(0, vec![]), Err(Error::ZeroAmbientDimension));
    }

    #[test]
    fn intersections() {
        let a = axes();
        let t = a.intersect([]).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(t.support().is_empty());
        let o = a.intersect([0, 1]).unwrap();
        assert_eq!(o.dim(), 0);
        assert!(o.contains_point(&[Rational::from_integer(0.into()), Rational::from_integer(0.into())]));
        let parallel = A::from_integers(2, &[(&[1, 0], 0), (&[1, 0], 1)]).unwrap();
        assert!(parallel.intersect([0, 1]).is_none());
    }

    #[test]
    fn intersection_support_is_maximal() {
        let a = concurrent();
        let o = a.intersect([0, 1]).unwrap();
        assert_eq!(o.support(), &BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn lattice_sizes() {
        let l = generic3().build_lattice();
        assert_eq!(l.len(), 7);
        assert_eq!(l.flats().iter().filter(|f| f.dim == 0).count(), 3);
        let l = concurrent().build_lattice();
        assert_eq!(l.len(), 5);
        let parallel = A::from_integers(2, &[(&[1, 0], 0), (&[1, 0], 1)]).unwrap();
        let l = parallel.build_lattice();
        assert_eq!(l.len(), 3);
        assert_eq!(l.arrangement_rank(), 1);
    }

    #[test]
    fn restrictions() {
        let a = axes();
        let g = a.geometric_lattice();
        let x_axis = g.by_support(&BTreeSet::from([1])).unwrap();
        let r = a.restrict(g.flat(x_axis)).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r.ambient_dim(), 1);
        assert_eq!(a.restrict(&a.ambient_flat()).unwrap(), a.build_lattice());

        let a = generic3();
        let g = a.geometric_lattice();
        let line = g.by_support(&BTreeSet::from([2])).unwrap();
        let r = a.restrict(g.flat(line)).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.flats().iter().filter(|f| f.dim == 0).count(), 2);
    }

    #[test]
    fn restrict_rejects_foreign_flats() {
        let a = axes();
        let other = generic3();
        let foreign = other.intersect([0, 2]).unwrap();
        assert_eq!(a.restrict(&foreign).unwrap_err(), Error::FlatNotInLattice);
    }

    #[test]
    fn parametrization_covers_flat() {
        let a = A::from_integers(3, &[(&[1, 1, 1], 3), (&[1, -1, 0], 1)]).unwrap();
        let line = a.intersect([0, 1]).unwrap();
        let (base, dirs) = line.parametrization();
        assert_eq!(dirs.len(), 1);
        assert!(line.contains_point(&base));
        let shifted: Vec<Rational> = base.iter().zip(&dirs[0]).map(|(b, d)| b + d * Rational::from_integer(5.into())).collect();
        assert!(line.contains_point(&shifted));
    }
}
