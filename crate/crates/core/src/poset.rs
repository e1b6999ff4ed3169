//! Intersection semilattices and their Möbius data.
//!
//! A [`Semilattice`] is the poset of flats of an arrangement ordered by
//! reverse inclusion: the ambient space is the minimum and smaller flats sit
//! higher. Everything the face-count theorem needs (Möbius function, Möbius
//! polynomial, f-polynomial, chamber count) is computed from the order alone,
//! so the same code serves hyperplanes, wiring diagrams and abstract input.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::BiPolynomial;

/// Index of a flat inside its [`Semilattice`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FlatId(pub usize);

impl fmt::Display for FlatId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of the intersection semilattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    pub id: FlatId,
    pub dim: usize,
    /// Indices of the arrangement elements containing this flat. Empty for
    /// abstract input.
    pub support: BTreeSet<usize>,
}

impl Flat {
    pub fn new(dim: usize, support: impl IntoIterator<Item = usize>) -> Self {
        Flat { id: FlatId(0), dim, support: support.into_iter().collect() }
    }

    pub fn abstract_flat(dim: usize) -> Self {
        Self::new(dim, [])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitRows { words, bits: vec![0; words * n] }
    }

    fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] |= 1 << (col % 64);
    }

    fn row(&self, row: usize) -> &[u64] {
        &self.bits[row * self.words..(row + 1) * self.words]
    }

    fn or_row_into(&mut self, src: usize, dst: usize) {
        for w in 0..self.words {
            let v = self.bits[src * self.words + w];
            self.bits[dst * self.words + w] |= v;
        }
    }
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let bit = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + bit)
        })
    })
}

/// Möbius values `μ(X, Y)` for all comparable pairs `X ≤ Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    /// Row `X` lists `(Y, μ(X, Y))` for every `Y ≥ X`, sorted by `Y`.
    rows: Vec<Vec<(FlatId, i64)>>,
}

impl MobiusTable {
    /// `μ(X, Y)`, zero when `X ≰ Y`.
    pub fn get(&self, x: FlatId, y: FlatId) -> i64 {
        let row = &self.rows[x.0];
        match row.binary_search_by_key(&y, |&(id, _)| id) {
            Ok(i) => row[i].1,
            Err(_) => 0,
        }
    }

    /// Entries `(Y, μ(X, Y))` for all `Y ≥ X`.
    pub fn row(&self, x: FlatId) -> &[(FlatId, i64)] {
        &self.rows[x.0]
    }

    pub fn entries(&self) -> impl Iterator<Item = (FlatId, FlatId, i64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |&(y, m)| (FlatId(x), y, m)))
    }
}

/// A validated finite meet semilattice of flats, ranked by codimension.
#[derive(Debug, Clone)]
pub struct Semilattice {
    ambient_dim: usize,
    flats: Vec<Flat>,
    /// `up.get(x, y)` iff `x ≤ y`.
    up: BitRows,
    /// `down.get(y, x)` iff `x ≤ y`.
    down: BitRows,
    minimum: FlatId,
    by_rank: Vec<FlatId>,
    mobius: OnceLock<MobiusTable>,
}

impl PartialEq for Semilattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.flats == other.flats && self.up == other.up
    }
}

impl Eq for Semilattice {}

impl Semilattice {
    /// Validates a candidate semilattice.
    ///
    /// `leq` lists pairs `(X, Y)` with `X ≤ Y`; reflexive and transitive
    /// closure is applied. Flat ids are reassigned to their position in
    /// `flats`.
    pub fn new(
        ambient_dim: usize,
        mut flats: Vec<Flat>,
        leq: impl IntoIterator<Item = (FlatId, FlatId)>,
    ) -> Result<Self> {
        let n = flats.len();
        if n == 0 {
            return Err(Error::NoMinimum);
        }
        for (i, flat) in flats.iter_mut().enumerate() {
            flat.id = FlatId(i);
            if flat.dim > ambient_dim {
                return Err(Error::InvalidDimension { flat: i, dim: flat.dim, ambient: ambient_dim });
            }
        }

        let mut up = BitRows::new(n);
        for i in 0..n {
            up.set(i, i);
        }
        for (x, y) in leq {
            for id in [x, y] {
                if id.0 >= n {
                    return Err(Error::UnknownFlat(id.0 as i64));
                }
            }
            up.set(x.0, y.0);
        }
        // Warshall closure, one row at a time.
        for k in 0..n {
            for i in 0..n {
                if i != k && up.get(i, k) {
                    up.or_row_into(k, i);
                }
            }
        }

        let mut down = BitRows::new(n);
        for x in 0..n {
            for y in iter_bits(up.row(x)).collect::<Vec<_>>() {
                if x != y && up.get(y, x) {
                    return Err(Error::NotAPartialOrder(x.min(y), x.max(y)));
                }
                down.set(y, x);
            }
        }

        let minimum = (0..n)
            .find(|&m| iter_bits(up.row(m)).count() == n)
            .map(FlatId)
            .ok_or(Error::NoMinimum)?;
        if flats[minimum.0].dim != ambient_dim {
            return Err(Error::MinimumNotAmbient { dim: flats[minimum.0].dim, ambient: ambient_dim });
        }

        for x in 0..n {
            for y in iter_bits(up.row(x)) {
                if x != y && flats[x].dim <= flats[y].dim {
                    return Err(Error::RankViolation { below: x, above: y });
                }
            }
        }

        let lattice = Semilattice {
            ambient_dim,
            by_rank: {
                let mut ids: Vec<FlatId> = (0..n).map(FlatId).collect();
                ids.sort_by_key(|&id| (ambient_dim - flats[id.0].dim, id));
                ids
            },
            flats,
            up,
            down,
            minimum,
            mobius: OnceLock::new(),
        };
        lattice.check_meets()?;
        Ok(lattice)
    }

    fn check_meets(&self) -> Result<()> {
        let n = self.len();
        let words = self.down.words;
        let mut common = vec![0u64; words];
        for x in 0..n {
            for y in x + 1..n {
                if self.up.get(x, y) || self.up.get(y, x) {
                    continue;
                }
                for (w, slot) in common.iter_mut().enumerate() {
                    *slot = self.down.row(x)[w] & self.down.row(y)[w];
                }
                // Strict rank monotonicity means the meet, if any, is the
                // unique lower bound of maximal rank.
                let best = iter_bits(&common)
                    .max_by_key(|&z| self.rank(FlatId(z)))
                    .expect("the minimum is a common lower bound");
                let below_best = self.down.row(best);
                if common.iter().zip(below_best).any(|(c, b)| c & !b != 0) {
                    return Err(Error::MissingMeet(x, y));
                }
            }
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, id: FlatId) -> Result<&Flat> {
        self.flats.get(id.0).ok_or(Error::UnknownFlat(id.0 as i64))
    }

    pub fn ids(&self) -> impl Iterator<Item = FlatId> {
        (0..self.flats.len()).map(FlatId)
    }

    /// The ambient space: the minimum under `≤`.
    pub fn minimum(&self) -> FlatId {
        self.minimum
    }

    /// Flats sorted by rank, ties broken by id.
    pub fn ids_by_rank(&self) -> &[FlatId] {
        &self.by_rank
    }

    pub fn dim(&self, id: FlatId) -> usize {
        self.flats[id.0].dim
    }

    /// `rk X = n - dim X`.
    pub fn rank(&self, id: FlatId) -> usize {
        self.ambient_dim - self.flats[id.0].dim
    }

    /// Largest rank of any flat.
    pub fn arrangement_rank(&self) -> usize {
        self.ids().map(|id| self.rank(id)).max().unwrap_or(0)
    }

    /// `X ≤ Y`, i.e. `Y ⊆ X`.
    pub fn leq(&self, x: FlatId, y: FlatId) -> bool {
        self.up.get(x.0, y.0)
    }

    pub fn lt(&self, x: FlatId, y: FlatId) -> bool {
        x != y && self.leq(x, y)
    }

    /// All `Y ≥ X` in id order.
    pub fn upper(&self, x: FlatId) -> impl Iterator<Item = FlatId> + '_ {
        iter_bits(self.up.row(x.0)).map(FlatId)
    }

    /// All `Y ≤ X` in id order.
    pub fn lower(&self, x: FlatId) -> impl Iterator<Item = FlatId> + '_ {
        iter_bits(self.down.row(x.0)).map(FlatId)
    }

    /// Flats covering the minimum.
    pub fn atoms(&self) -> Vec<FlatId> {
        self.ids().filter(|&id| self.rank(id) == 1).collect()
    }

    /// Greatest lower bound of two flats.
    pub fn meet(&self, x: FlatId, y: FlatId) -> FlatId {
        let common: Vec<u64> =
            self.down.row(x.0).iter().zip(self.down.row(y.0)).map(|(a, b)| a & b).collect();
        iter_bits(&common)
            .map(FlatId)
            .max_by_key(|&z| self.rank(z))
            .expect("validated semilattice has meets")
    }

    fn check_id(&self, id: FlatId) -> Result<()> {
        if id.0 < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownFlat(id.0 as i64))
        }
    }

    /// The Möbius function on every interval, computed once.
    pub fn mobius_table(&self) -> &MobiusTable {
        self.mobius.get_or_init(|| MobiusTable {
            rows: self.ids().map(|x| self.mobius_row(x)).collect(),
        })
    }

    /// `μ(X, ·)` over the upper set of `X` via `μ(X,Y) = -Σ_{X ≤ Z < Y} μ(X,Z)`,
    /// visiting `Y` by increasing rank so every `Z < Y` is already known.
    fn mobius_row(&self, x: FlatId) -> Vec<(FlatId, i64)> {
        let mut upper: Vec<FlatId> = self.upper(x).collect();
        upper.sort_by_key(|&y| (self.rank(y), y));
        let mut values: Vec<(FlatId, i64)> = Vec::with_capacity(upper.len());
        for &y in &upper {
            let value = if y == x {
                1
            } else {
                -values
                    .iter()
                    .filter(|&&(z, _)| self.lt(z, y))
                    .map(|&(_, m)| m)
                    .sum::<i64>()
            };
            values.push((y, value));
        }
        values.sort_by_key(|&(y, _)| y);
        values
    }

    /// `μ(X, Y)`; zero when `X ≰ Y`.
    pub fn mobius(&self, x: FlatId, y: FlatId) -> Result<i64> {
        self.check_id(x)?;
        self.check_id(y)?;
        Ok(self.mobius_table().get(x, y))
    }

    /// `M(x, y) = Σ_{X ≤ Y} μ(X, Y) x^{rk X} y^{rk A - rk Y}`.
    pub fn mobius_polynomial(&self) -> BiPolynomial {
        let rk = self.arrangement_rank();
        let mut poly = BiPolynomial::zero();
        for (x, y, m) in self.mobius_table().entries() {
            poly.add_term(self.rank(x) as u32, (rk - self.rank(y)) as u32, BigInt::from(m));
        }
        poly
    }

    /// `(-1)^{rk A} M(-x, -1)`.
    pub fn f_polynomial(&self) -> Result<BiPolynomial> {
        f_from_mobius(&self.mobius_polynomial(), self.arrangement_rank())
    }

    /// Face counts by dimension, `f_i = Σ_{dim X = i} Σ_{Y ≥ X} (-1)^{rk Y - rk X} μ(X, Y)`.
    ///
    /// The inner sum is the number of chambers of the restriction to `X`.
    pub fn f_vector(&self) -> Vec<i64> {
        let mut f = vec![0i64; self.ambient_dim + 1];
        for x in self.ids() {
            f[self.dim(x)] += self.restricted_chamber_count(x);
        }
        f
    }

    /// Chambers of the restriction to `X`: `Σ_{Y ≥ X} (-1)^{rk Y - rk X} μ(X, Y)`.
    pub fn restricted_chamber_count(&self, x: FlatId) -> i64 {
        let base = self.rank(x);
        self.mobius_table()
            .row(x)
            .iter()
            .map(|&(y, m)| if (self.rank(y) - base) % 2 == 0 { m } else { -m })
            .sum()
    }

    /// `Σ_X (-1)^{rk X} μ(T, X)`.
    pub fn chamber_count(&self) -> i64 {
        self.restricted_chamber_count(self.minimum)
    }

    /// The sub-semilattice `{Y ≥ X}` rooted at `X`, with ambient dimension
    /// `dim X`. Supports are kept as they were in `self`.
    pub fn upper_set(&self, x: FlatId) -> Result<Semilattice> {
        self.check_id(x)?;
        let members: Vec<FlatId> = self.upper(x).collect();
        let mut index = vec![usize::MAX; self.len()];
        for (i, &m) in members.iter().enumerate() {
            index[m.0] = i;
        }
        let flats = members.iter().map(|&m| self.flats[m.0].clone()).collect();
        let mut pairs = Vec::new();
        for &a in &members {
            for b in self.upper(a) {
                pairs.push((FlatId(index[a.0]), FlatId(index[b.0])));
            }
        }
        Semilattice::new(self.dim(x), flats, pairs)
    }
}

/// Applies the face-count transform `f(x) = (-1)^{rk A} M(-x, -1)`.
///
/// Fails with [`Error::NegativeCoefficient`] if any coefficient of the result
/// is negative, which proves `M` does not come from an arrangement.
pub fn f_from_mobius(mobius: &BiPolynomial, arrangement_rank: usize) -> Result<BiPolynomial> {
    let f = mobius.specialize_signed(true, true, arrangement_rank % 2 == 1);
    if let Some((power, _, c)) = f.terms().find(|(_, _, c)| c.is_negative()) {
        return Err(Error::NegativeCoefficient { power, coeff: c.to_string() });
    }
    Ok(f)
}

/// Reads `f_0..f_n` off an f-polynomial: `f_i` is the coefficient of `x^{n-i}`.
pub fn f_vector_from_polynomial(f: &BiPolynomial, ambient_dim: usize) -> Vec<BigInt> {
    (0..=ambient_dim).map(|i| f.coeff((ambient_dim - i) as u32, 0)).collect()
}

/// `Σ_i (-1)^i f_i`.
pub fn euler_characteristic(f: &[i64]) -> i64 {
    f.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c } else { -c }).sum()
}

/// Whether `f_vector_from_polynomial(f, n)` equals `counts` and `f` has no
/// terms beyond degree `n`.
pub fn f_vectors_agree(f: &BiPolynomial, ambient_dim: usize, counts: &[i64]) -> bool {
    let theorem = f_vector_from_polynomial(f, ambient_dim);
    f.x_degree().is_none_or(|d| d as usize <= ambient_dim)
        && theorem.len() == counts.len()
        && theorem.iter().zip(counts).all(|(a, &b)| *a == BigInt::from(b))
}
