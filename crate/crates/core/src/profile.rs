//! Growth exponents of error-set families.
//!
//! A family of error sets indexed by n is characterized by five exponents:
//! |E1| = q^(c1 n), |E2| = q^(c2 n), and the pairwise difference sets
//! |Δ(Ei, Ej)| = q^(cij n) up to subexponential factors. These five numbers
//! are the only channel data the asymptotic rate formulas consume.

use crate::bounds::f_q;
use crate::error::{Error, Result};
use crate::error_set::{difference_set_auto, ErrorSet, ENUM_CAP};

const ORDER_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibilityProfile {
    pub c1: f64,
    pub c2: f64,
    pub c11: f64,
    pub c12: f64,
    pub c22: f64,
}

impl AdmissibilityProfile {
    /// Validates 0 <= c <= 1, c1 <= c2 and c11 <= c12 <= c22.
    pub fn new(c1: f64, c2: f64, c11: f64, c12: f64, c22: f64) -> Result<Self> {
        for c in [c1, c2, c11, c12, c22] {
            if !(-ORDER_TOL..=1.0 + ORDER_TOL).contains(&c) {
                return Err(Error::InvalidParameter(format!(
                    "exponent {c} outside [0,1]"
                )));
            }
        }
        if c1 > c2 + ORDER_TOL || c11 > c12 + ORDER_TOL || c12 > c22 + ORDER_TOL {
            return Err(Error::InvalidParameter(
                "profile exponents must satisfy c1 <= c2 and c11 <= c12 <= c22".into(),
            ));
        }
        Ok(AdmissibilityProfile {
            c1,
            c2,
            c11,
            c12,
            c22,
        })
    }

    /// Hamming bursts with E1 = {0} and E2 a radius-Tn ball:
    /// (0, F_q(T), 0, F_q(T), F_q(2T)).
    pub fn hamming(q: u64, t: f64) -> Self {
        AdmissibilityProfile {
            c1: 0.0,
            c2: f_q(q, t),
            c11: 0.0,
            c12: f_q(q, t),
            c22: f_q(q, 2.0 * t),
        }
    }

    /// Two-radius Hamming bursts, E1 and E2 balls of radii T1 n <= T2 n;
    /// difference sets are again balls, with radii summed.
    pub fn hamming_two_radius(q: u64, t1: f64, t2: f64) -> Result<Self> {
        if t1 > t2 {
            return Err(Error::InvalidParameter("need t1 <= t2".into()));
        }
        Self::new(
            f_q(q, t1),
            f_q(q, t2),
            f_q(q, 2.0 * t1),
            f_q(q, t1 + t2),
            f_q(q, 2.0 * t2),
        )
    }

    /// Max-norm boxes {-a..a}^n and {-b..b}^n in a prime field; the
    /// per-coordinate difference sets are intervals, capped at q.
    pub fn max_norm(q: u64, a: u64, b: u64) -> Result<Self> {
        if a > b {
            return Err(Error::InvalidParameter("need a <= b".into()));
        }
        if 2 * b + 1 > q {
            return Err(Error::InvalidParameter(format!(
                "box {{-{b}..{b}}} does not embed in GF({q})"
            )));
        }
        let lg = |count: u64| (count as f64).ln() / (q as f64).ln();
        Self::new(
            lg(2 * a + 1),
            lg(2 * b + 1),
            lg(q.min(4 * a + 1)),
            lg(q.min(2 * a + 2 * b + 1)),
            lg(q.min(4 * b + 1)),
        )
    }

    /// Nested linear subspaces of dimensions Sn <= Tn: difference sets are
    /// the subspaces themselves, so (S, T, S, T, T).
    pub fn subspace(s: f64, t: f64) -> Result<Self> {
        if s > t {
            return Err(Error::InvalidParameter("need S <= T".into()));
        }
        Self::new(s, t, s, t, t)
    }

    /// Finite-n estimate from exact cardinalities: c = log_q |set| / n.
    /// All five sets must be enumerable within the internal cap.
    pub fn empirical(e1: &ErrorSet, e2: &ErrorSet) -> Result<Self> {
        if e1.spec() != e2.spec() || e1.n() != e2.n() {
            return Err(Error::DimensionMismatch(
                "profile of sets over different ambients".into(),
            ));
        }
        let n = e1.n() as f64;
        let q = e1.spec().q() as f64;
        let lg = |size: u128| (size as f64).ln() / (n * q.ln());
        let s1 = e1.size().ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            cap: crate::error_set::ENUM_CAP,
        })?;
        let s2 = e2.size().ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            cap: crate::error_set::ENUM_CAP,
        })?;
        let too_big = || Error::BudgetExceeded {
            needed: u128::MAX,
            cap: ENUM_CAP,
        };
        let d11 = difference_set_auto(e1, e1, ENUM_CAP)?.size().ok_or_else(too_big)?;
        let d12 = difference_set_auto(e1, e2, ENUM_CAP)?.size().ok_or_else(too_big)?;
        let d22 = difference_set_auto(e2, e2, ENUM_CAP)?.size().ok_or_else(too_big)?;
        Self::new(lg(s1), lg(s2), lg(d11), lg(d12), lg(d22))
    }
}
