//! Per-instance certification of the face-count formula.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::Result;
use crate::faces::{enumerate_faces_capped, f_vector_of};
use crate::geom::Arrangement;
use crate::poly::BiPolynomial;
use crate::poset::{euler_characteristic, f_from_mobius, f_vector_from_polynomial, Semilattice};
use crate::scalar::Scalar;
use crate::wiring::ValidatedWiring;

/// Both sides of `f(x) = (-1)^{rk A} M(-x, -1)` for one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub kind: String,
    pub ambient_dim: usize,
    pub arrangement_rank: usize,
    pub mobius_poly: BiPolynomial,
    /// `None` if the transform produced a negative coefficient.
    pub f_poly_theorem: Option<BiPolynomial>,
    pub f_vector_theorem: Option<Vec<i64>>,
    pub f_vector_direct: Vec<i64>,
    pub chambers_theorem: i64,
    pub chambers_direct: i64,
    pub euler_check: bool,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl VerifyReport {
    fn new(kind: &str, lattice: &Semilattice, f_vector_direct: Vec<i64>, chambers_direct: i64) -> Self {
        let n = lattice.ambient_dim();
        let mobius_poly = lattice.mobius_polynomial();
        let rank = lattice.arrangement_rank();
        let f_poly_theorem = f_from_mobius(&mobius_poly, rank).ok();
        let f_vector_theorem = f_poly_theorem.as_ref().and_then(|f| {
            if f.x_degree().is_some_and(|d| d as usize > n) {
                return None;
            }
            f_vector_from_polynomial(f, n).iter().map(|c| c.to_i64()).collect()
        });
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let euler_check = euler_characteristic(&f_vector_direct) == sign;
        let matches = f_vector_theorem.as_ref() == Some(&f_vector_direct);
        VerifyReport {
            kind: kind.to_string(),
            ambient_dim: n,
            arrangement_rank: rank,
            mobius_poly,
            f_poly_theorem,
            f_vector_theorem,
            f_vector_direct,
            chambers_theorem: lattice.chamber_count(),
            chambers_direct,
            euler_check,
            matches,
        }
    }
}

pub fn verify_arrangement<S: Scalar>(arrangement: &Arrangement<S>, cap: usize) -> Result<VerifyReport> {
    let faces = enumerate_faces_capped(arrangement, cap)?;
    let direct = f_vector_of(&faces, arrangement.ambient_dim());
    let chambers = faces.iter().filter(|f| f.sign_vector.is_chamber()).count() as i64;
    Ok(VerifyReport::new("hyperplanes", &arrangement.build_lattice(), direct, chambers))
}

pub fn verify_wiring(wiring: &ValidatedWiring) -> VerifyReport {
    let f = wiring.sweep_f_vector();
    VerifyReport::new("wiring", &wiring.lattice(), f.to_vec(), f[2])
}
