//! Face enumeration by sign vectors.
//!
//! A sign vector assigns `+`, `0` or `-` to each hyperplane; it is a face
//! when the corresponding intersection of hyperplanes and open half-spaces
//! is nonempty. Feasibility is decided exactly: the equalities are solved
//! first, and the remaining strict inequalities are checked on the
//! parametrized flat by Fourier–Motzkin elimination.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fm::{is_feasible, Inequality};
use crate::geom::Arrangement;
use crate::poset::FlatId;
use crate::scalar::Scalar;

/// Hyperplane count above which enumeration refuses to run unless the cap is
/// raised explicitly.
pub const DEFAULT_CAP: usize = 12;

/// Position relative to one hyperplane. Ordered `0 < + < -`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Zero,
    Plus,
    Minus,
}

impl Sign {
    pub const ALL: [Sign; 3] = [Sign::Zero, Sign::Plus, Sign::Minus];

    pub fn as_char(self) -> char {
        match self {
            Sign::Zero => '0',
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Indices with sign `0`.
    pub fn zero_set(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &s)| s == Sign::Zero).map(|(i, _)| i)
    }

    pub fn is_chamber(&self) -> bool {
        !self.0.contains(&Sign::Zero)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| Sign::from_char(c).ok_or_else(|| Error::Parse(format!("bad sign {c:?}"))))
            .collect::<Result<_>>()
            .map(SignVector)
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A face together with the flat spanned by its zero set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FaceRecord {
    #[serde(rename = "signs")]
    pub sign_vector: SignVector,
    pub dim: usize,
    pub flat: FlatId,
}

/// Decides whether `signs` is a face of `arrangement`.
pub fn feasible<S: Scalar>(arrangement: &Arrangement<S>, signs: &SignVector) -> Result<bool> {
    if signs.len() != arrangement.len() {
        return Err(Error::DimensionMismatch { expected: arrangement.len(), found: signs.len() });
    }
    Ok(feasible_prefix(arrangement, &signs.0))
}

/// Feasibility of the constraints from the first `signs.len()` hyperplanes.
fn feasible_prefix<S: Scalar>(arrangement: &Arrangement<S>, signs: &[Sign]) -> bool {
    let zeros = signs.iter().enumerate().filter(|(_, &s)| s == Sign::Zero).map(|(i, _)| i);
    let Some(flat) = arrangement.solve(zeros) else {
        return false;
    };
    let (base, directions) = flat.parametrization();
    let system: Vec<Inequality<S>> = signs
        .iter()
        .zip(arrangement.hyperplanes())
        .filter(|(&s, _)| s != Sign::Zero)
        .map(|(&s, h)| {
            // h(base + D t) = h(base) + (n · D) t
            let coeffs: Vec<S> = directions
                .iter()
                .map(|d| d.iter().zip(h.normal()).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
                .collect();
            let shift = -h.evaluate(&base);
            match s {
                Sign::Plus => Inequality::greater_than(coeffs, shift),
                _ => Inequality::less_than(coeffs, shift),
            }
        })
        .collect();
    if system.is_empty() {
        return true;
    }
    is_feasible(&system)
}

/// All faces, in lexicographic sign order with `0 < + < -`, using the
/// default cap.
pub fn enumerate_faces<S: Scalar>(arrangement: &Arrangement<S>) -> Result<Vec<FaceRecord>> {
    enumerate_faces_capped(arrangement, DEFAULT_CAP)
}

/// Depth-first search over sign assignments, abandoning any prefix whose
/// constraints are already infeasible.
pub fn enumerate_faces_capped<S: Scalar>(
    arrangement: &Arrangement<S>,
    cap: usize,
) -> Result<Vec<FaceRecord>> {
    if arrangement.len() > cap {
        return Err(Error::CapExceeded { count: arrangement.len(), cap });
    }
    let lattice = arrangement.geometric_lattice();
    let index = lattice.support_index();
    let mut faces = Vec::new();
    let mut prefix = Vec::with_capacity(arrangement.len());
    search(arrangement, &mut prefix, &mut |signs| {
        let sign_vector = SignVector(signs.to_vec());
        // Every hyperplane containing the face has sign 0, so the zero set
        // is the maximal support of its flat.
        let support = sign_vector.zero_set().collect();
        let flat = index[&support];
        faces.push(FaceRecord { dim: lattice.flat(flat).dim(), flat, sign_vector });
    });
    Ok(faces)
}

fn search<S: Scalar>(arrangement: &Arrangement<S>, prefix: &mut Vec<Sign>, emit: &mut impl FnMut(&[Sign])) {
    if prefix.len() == arrangement.len() {
        emit(prefix);
        return;
    }
    for sign in Sign::ALL {
        prefix.push(sign);
        if feasible_prefix(arrangement, prefix) {
            search(arrangement, prefix, emit);
        }
        prefix.pop();
    }
}

/// Histogram of face dimensions, `f_0..f_n`.
pub fn f_vector_of(faces: &[FaceRecord], ambient_dim: usize) -> Vec<i64> {
    let mut f = vec![0i64; ambient_dim + 1];
    for face in faces {
        f[face.dim] += 1;
    }
    f
}

/// Face counts by dimension from direct enumeration.
pub fn f_vector_oracle<S: Scalar>(arrangement: &Arrangement<S>) -> Result<Vec<i64>> {
    Ok(f_vector_of(&enumerate_faces(arrangement)?, arrangement.ambient_dim()))
}

/// Faces with no zero sign.
pub fn chambers<S: Scalar>(arrangement: &Arrangement<S>) -> Result<Vec<SignVector>> {
    Ok(enumerate_faces(arrangement)?
        .into_iter()
        .map(|f| f.sign_vector)
        .filter(SignVector::is_chamber)
        .collect())
}
