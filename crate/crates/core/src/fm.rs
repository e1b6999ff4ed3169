//! Fourier–Motzkin elimination with strictness tracking.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// `coeffs · t < rhs` when `strict`, otherwise `coeffs · t <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality<S> {
    pub coeffs: Vec<S>,
    pub rhs: S,
    pub strict: bool,
}

impl<S: Scalar> Inequality<S> {
    pub fn less_than(coeffs: Vec<S>, rhs: S) -> Self {
        Inequality { coeffs, rhs, strict: true }
    }

    pub fn at_most(coeffs: Vec<S>, rhs: S) -> Self {
        Inequality { coeffs, rhs, strict: false }
    }

    /// `coeffs · t > rhs`, rewritten as `-coeffs · t < -rhs`.
    pub fn greater_than(coeffs: Vec<S>, rhs: S) -> Self {
        Self::less_than(coeffs.into_iter().map(|c| -c).collect(), -rhs)
    }

    /// For a constraint with no variables left: does it hold?
    fn holds_trivially(&self) -> bool {
        if self.strict {
            self.rhs.is_positive()
        } else {
            !self.rhs.is_negative()
        }
    }

    fn scaled(&self, factor: &S) -> (Vec<S>, S) {
        (
            self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect(),
            self.rhs.clone() * factor.clone(),
        )
    }
}

/// Drops trivially true constraints, reports a trivially false one, and keeps
/// only the tightest constraint per direction.
fn normalize<S: Scalar>(system: Vec<Inequality<S>>) -> Option<Vec<Inequality<S>>> {
    let mut tightest: BTreeMap<Vec<S>, (S, bool)> = BTreeMap::new();
    for ineq in system {
        let Some(lead) = ineq.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) else {
            if !ineq.holds_trivially() {
                return None;
            }
            continue;
        };
        let inv = S::one() / lead;
        let (coeffs, rhs) = ineq.scaled(&inv);
        tightest
            .entry(coeffs)
            .and_modify(|(r, s)| {
                if rhs < *r || (rhs == *r && ineq.strict) {
                    *r = rhs.clone();
                    *s = ineq.strict;
                }
            })
            .or_insert((rhs.clone(), ineq.strict));
    }
    Some(
        tightest
            .into_iter()
            .map(|(coeffs, (rhs, strict))| Inequality { coeffs, rhs, strict })
            .collect(),
    )
}

/// Decides whether the system has a real solution.
///
/// Eliminates one variable at a time. Every pair of an upper and a lower
/// bound on the eliminated variable yields a constraint that is strict if
/// either parent was strict. The system is infeasible iff some constant
/// constraint `0 < c` with `c <= 0`, or `0 <= c` with `c < 0`, appears.
pub fn is_feasible<S: Scalar>(system: &[Inequality<S>]) -> bool {
    let Some(mut current) = normalize(system.to_vec()) else {
        return false;
    };
    let vars = system.first().map_or(0, |i| i.coeffs.len());
    for var in (0..vars).rev() {
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let mut rest = Vec::new();
        for ineq in current {
            let c = ineq.coeffs[var].clone();
            if c.is_zero() {
                rest.push(ineq);
            } else {
                // Scale so the eliminated coefficient is ±1.
                let (coeffs, rhs) = ineq.scaled(&(S::one() / c.abs()));
                let scaled = Inequality { coeffs, rhs, strict: ineq.strict };
                if c.is_positive() {
                    upper.push(scaled);
                } else {
                    lower.push(scaled);
                }
            }
        }
        for u in &upper {
            for l in &lower {
                let coeffs = u.coeffs.iter().zip(&l.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
                rest.push(Inequality {
                    coeffs,
                    rhs: u.rhs.clone() + l.rhs.clone(),
                    strict: u.strict || l.strict,
                });
            }
        }
        match normalize(rest) {
            Some(next) => current = next,
            None => return false,
        }
    }
    current.iter().all(Inequality::holds_trivially)
}
