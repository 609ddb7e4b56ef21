//! Closed-form rate expressions for phased-burst channels.
//!
//! Everything here is a pure function of the channel geometry: the q-ary
//! entropy exponent governing ball sizes, sphere-packing and
//! Gilbert-Varshamov style bounds for the burst channel, the classical
//! bounds they are compared against, and the asymptotic rates of the two-
//! and three-level concatenated constructions.
//!
//! Raw formula values are returned unclamped (they can go negative); use
//! [`RatePoint::clamped`] at the reporting layer.

use crate::profile::AdmissibilityProfile;

/// q-ary entropy H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x).
pub fn entropy_q(q: u64, x: f64) -> f64 {
    assert!(q >= 2, "entropy needs q >= 2");
    assert!((0.0..=1.0).contains(&x), "entropy argument {x} outside [0,1]");
    if x == 0.0 {
        return 0.0;
    }
    let lq = (q as f64).ln();
    if x == 1.0 {
        return ((q - 1) as f64).ln() / lq;
    }
    (x * ((q - 1) as f64).ln() - x * x.ln() - (1.0 - x) * (1.0 - x).ln()) / lq
}

/// Ball-size exponent F_q(T) = H_q(min(T, (q-1)/q)): the entropy clamped at
/// its maximum, so radii past the covering radius saturate at exponent 1.
pub fn f_q(q: u64, t: f64) -> f64 {
    assert!(t >= 0.0, "radius fraction must be nonnegative");
    let sat = (q - 1) as f64 / q as f64;
    entropy_q(q, t.min(sat))
}

/// A normalized burst channel: field size, burst fraction W = w/m, and the
/// growth exponents of the error sets and their pairwise difference sets.
#[derive(Clone, Debug)]
pub struct ChannelShape {
    pub q: u64,
    pub w: f64,
    pub profile: AdmissibilityProfile,
}

impl ChannelShape {
    pub fn new(q: u64, w: f64, profile: AdmissibilityProfile) -> Self {
        assert!((0.0..=1.0).contains(&w), "burst fraction outside [0,1]");
        ChannelShape { q, w, profile }
    }

    /// The Hamming-burst shape: E1 = {0}, E2 a radius-Tn ball.
    pub fn hamming(q: u64, t: f64, w: f64) -> Self {
        Self::new(q, w, AdmissibilityProfile::hamming(q, t))
    }
}

/// Sphere-packing upper bound R_H = 1 - (1-W) c1 - W c2.
pub fn rate_pbe_hamming(shape: &ChannelShape) -> f64 {
    let p = &shape.profile;
    1.0 - (1.0 - shape.w) * p.c1 - shape.w * p.c2
}

/// Which case of the difference-set counting applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GvBranch {
    /// c11 + c22 <= 2 c12 and 2W <= 1.
    StandardLowBurst,
    /// c11 + c22 <= 2 c12 and 2W > 1.
    StandardHighBurst,
    /// c11 + c22 > 2 c12: aligned bad columns dominate.
    Skewed,
}

pub fn gv_branch(shape: &ChannelShape) -> GvBranch {
    let p = &shape.profile;
    if p.c11 + p.c22 <= 2.0 * p.c12 {
        if 2.0 * shape.w <= 1.0 {
            GvBranch::StandardLowBurst
        } else {
            GvBranch::StandardHighBurst
        }
    } else {
        GvBranch::Skewed
    }
}

/// Existence lower bound R_GV = 1 - alpha with the three-case exponent
/// alpha of the difference-set size.
pub fn rate_pbe_gv(shape: &ChannelShape) -> f64 {
    let p = &shape.profile;
    let w = shape.w;
    let alpha = match gv_branch(shape) {
        GvBranch::StandardLowBurst => (1.0 - 2.0 * w) * p.c11 + 2.0 * w * p.c12,
        GvBranch::StandardHighBurst => 2.0 * (1.0 - w) * p.c12 + (2.0 * w - 1.0) * p.c22,
        GvBranch::Skewed => (1.0 - w) * p.c11 + w * p.c22,
    };
    1.0 - alpha
}

/// Closed forms for the Hamming-burst channel (E1 = {0}, E2 a radius-Tn
/// ball): the packing bound 1 - W F_q(T) and the GV bound with its 2W
/// case split. Returns (r_h, r_gv).
pub fn rate_hpbe_closed(q: u64, t: f64, w: f64) -> (f64, f64) {
    let r_h = 1.0 - w * f_q(q, t);
    let r_gv = if 2.0 * w <= 1.0 {
        1.0 - 2.0 * w * f_q(q, t)
    } else {
        1.0 - 2.0 * (1.0 - w) * f_q(q, t) - (2.0 * w - 1.0) * f_q(q, 2.0 * t)
    };
    (r_h, r_gv)
}

/// Classical block-code bounds at a given error fraction:
/// (hamming, gv) = (1 - F_q(f), 1 - F_q(2f)).
pub fn rate_classical(q: u64, fraction: f64) -> (f64, f64) {
    (1.0 - f_q(q, fraction), 1.0 - f_q(q, 2.0 * fraction))
}

/// Asymptotic rate of the two-level construction:
/// 1 - c22 + (c22 - c11) max(1 - 2W, 0).
pub fn rate_2lvl(shape: &ChannelShape) -> f64 {
    let p = &shape.profile;
    1.0 - p.c22 + (p.c22 - p.c11) * (1.0 - 2.0 * shape.w).max(0.0)
}

/// Asymptotic rate of the three-level construction.
pub fn rate_3lvl(shape: &ChannelShape) -> f64 {
    let p = &shape.profile;
    let w = shape.w;
    if 2.0 * w <= 1.0 {
        1.0 - w * (p.c12 + p.c22) - p.c11 * (1.0 - 2.0 * w)
    } else {
        1.0 - p.c12 * (1.0 - w) - p.c22 * w
    }
}

/// All six rate families at one Hamming-burst channel point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatePoint {
    pub r_classical_h: f64,
    pub r_classical_gv: f64,
    pub r_h: f64,
    pub r_gv: f64,
    pub r_2lvl: f64,
    pub r_3lvl: f64,
}

impl RatePoint {
    /// Evaluate every family at (q, T, W); raw, unclamped values.
    pub fn hamming(q: u64, t: f64, w: f64) -> RatePoint {
        let shape = ChannelShape::hamming(q, t, w);
        let (r_classical_h, r_classical_gv) = rate_classical(q, w * t);
        RatePoint {
            r_classical_h,
            r_classical_gv,
            r_h: rate_pbe_hamming(&shape),
            r_gv: rate_pbe_gv(&shape),
            r_2lvl: rate_2lvl(&shape),
            r_3lvl: rate_3lvl(&shape),
        }
    }

    /// Rates clamped below at zero for reporting.
    pub fn clamped(&self) -> RatePoint {
        RatePoint {
            r_classical_h: self.r_classical_h.max(0.0),
            r_classical_gv: self.r_classical_gv.max(0.0),
            r_h: self.r_h.max(0.0),
            r_gv: self.r_gv.max(0.0),
            r_2lvl: self.r_2lvl.max(0.0),
            r_3lvl: self.r_3lvl.max(0.0),
        }
    }
}

/// Grid sweep over one free parameter with the other fixed.
#[derive(Clone, Copy, Debug)]
pub enum SweepMode {
    /// Fix T, sweep W over [0,1].
    FixT(f64),
    /// Fix W, sweep T over [0,1].
    FixW(f64),
}

/// Evaluate all rate families on an evenly spaced grid of `steps` points
/// (steps >= 2). Returns (x, rates) pairs with raw rate values.
pub fn sweep(q: u64, mode: SweepMode, steps: usize) -> Vec<(f64, RatePoint)> {
    assert!(steps >= 2, "a sweep needs at least two grid points");
    (0..steps)
        .map(|i| {
            let x = i as f64 / (steps - 1) as f64;
            let point = match mode {
                SweepMode::FixT(t) => RatePoint::hamming(q, t, x),
                SweepMode::FixW(w) => RatePoint::hamming(q, x, w),
            };
            (x, point)
        })
        .collect()
}

/// Residuals and slacks of the formula-level identities relating the
/// construction rates to each other and to the bounds.
#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub branch: GvBranch,
    pub rates: RatePoint4,
    /// | R_3lvl - (R_2lvl + min(W, 1-W) (c22 - c12)) |
    pub identity_residual: f64,
    /// | (R_GV - R_3lvl) - expected case value |
    pub gv_gap_residual: f64,
    /// Slack of R_H >= 1 - F_q(WT) and R_GV >= 1 - F_q(2WT); present only
    /// for Hamming-parameterized shapes.
    pub classical_slack: Option<(f64, f64)>,
}

/// The four profile-level rates entering the comparisons.
#[derive(Clone, Copy, Debug)]
pub struct RatePoint4 {
    pub r_h: f64,
    pub r_gv: f64,
    pub r_2lvl: f64,
    pub r_3lvl: f64,
}

impl ComparisonReport {
    pub fn from_shape(shape: &ChannelShape, hamming_t: Option<f64>) -> ComparisonReport {
        let p = &shape.profile;
        let w = shape.w;
        let r_h = rate_pbe_hamming(shape);
        let r_gv = rate_pbe_gv(shape);
        let r2 = rate_2lvl(shape);
        let r3 = rate_3lvl(shape);
        let m = w.min(1.0 - w);
        let identity_residual = (r3 - (r2 + m * (p.c22 - p.c12))).abs();
        let branch = gv_branch(shape);
        let expected_gap = match branch {
            GvBranch::Skewed => m * (p.c12 - p.c11),
            _ => m * (p.c22 - p.c12),
        };
        let gv_gap_residual = ((r_gv - r3) - expected_gap).abs();
        let classical_slack = hamming_t.map(|t| {
            let (ch, cgv) = rate_classical(shape.q, w * t);
            (r_h - ch, r_gv - cgv)
        });
        ComparisonReport {
            branch,
            rates: RatePoint4 {
                r_h,
                r_gv,
                r_2lvl: r2,
                r_3lvl: r3,
            },
            identity_residual,
            gv_gap_residual,
            classical_slack,
        }
    }

    pub fn hamming(q: u64, t: f64, w: f64) -> ComparisonReport {
        Self::from_shape(&ChannelShape::hamming(q, t, w), Some(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    #[test]
    fn entropy_values() {
        assert!((entropy_q(2, 0.5) - 1.0).abs() < TOL);
        assert!((entropy_q(2, 0.1) - 0.46900).abs() < 1e-5);
        assert!((f_q(2, 0.75) - 1.0).abs() < TOL);
        assert_eq!(entropy_q(2, 0.0), 0.0);
        assert!((entropy_q(4, 1.0) - (3f64).ln() / (4f64).ln()).abs() < TOL);
    }

    #[test]
    fn packing_bound_values() {
        let shape = ChannelShape::hamming(2, 0.25, 0.4);
        assert!((rate_pbe_hamming(&shape) - 0.67549).abs() < 1e-4);
        let shape = ChannelShape::hamming(2, 0.25, 1.0);
        assert!((rate_pbe_hamming(&shape) - 0.18872).abs() < 1e-4);
        let zero_w = ChannelShape::hamming(2, 0.25, 0.0);
        assert!((rate_pbe_hamming(&zero_w) - 1.0).abs() < TOL);
    }

    #[test]
    fn gv_bound_values() {
        assert!((rate_pbe_gv(&ChannelShape::hamming(2, 0.1, 0.2)) - 0.81).abs() < 5e-3);
        assert!((rate_pbe_gv(&ChannelShape::hamming(2, 0.25, 0.5)) - 0.18872).abs() < 1e-4);
        assert!((rate_pbe_gv(&ChannelShape::hamming(2, 0.3, 0.0)) - 1.0).abs() < TOL);
    }

    #[test]
    fn closed_forms_match_profile_path_on_grid() {
        for ti in 0..50 {
            for wi in 0..50 {
                let t = ti as f64 / 49.0;
                let w = wi as f64 / 49.0;
                let (r_h, r_gv) = rate_hpbe_closed(2, t, w);
                let shape = ChannelShape::hamming(2, t, w);
                assert!((r_h - rate_pbe_hamming(&shape)).abs() < TOL, "t={t} w={w}");
                assert!((r_gv - rate_pbe_gv(&shape)).abs() < TOL, "t={t} w={w}");
            }
        }
    }

    #[test]
    fn classical_bound_values() {
        let (h, _) = rate_classical(2, 1.0 / 60.0);
        assert!((h - 0.878).abs() < 1e-3);
        assert_eq!(rate_classical(2, 0.0), (1.0, 1.0));
        let (_, gv) = rate_classical(2, 0.25);
        assert!(gv.abs() < TOL);
    }

    #[test]
    fn construction_rate_values() {
        let shape = ChannelShape::hamming(2, 0.1, 0.2);
        assert!((rate_2lvl(&shape) - 0.71).abs() < 5e-3);
        assert!((rate_3lvl(&shape) - 0.76).abs() < 5e-3);
        let shape = ChannelShape::hamming(2, 0.25, 0.5);
        assert!((rate_3lvl(&shape) - 0.09436).abs() < 1e-4);
    }

    #[test]
    fn two_level_matches_its_closed_form() {
        for ti in 0..25 {
            for wi in 0..25 {
                let t = ti as f64 / 24.0;
                let w = wi as f64 / 24.0;
                let shape = ChannelShape::hamming(2, t, w);
                let closed = 1.0 - (2.0 * w).min(1.0) * f_q(2, 2.0 * t);
                assert!((rate_2lvl(&shape) - closed).abs() < TOL);
                let closed3 = 1.0 - w * f_q(2, 2.0 * t) - w.min(1.0 - w) * f_q(2, t);
                assert!((rate_3lvl(&shape) - closed3).abs() < TOL);
            }
        }
    }

    #[test]
    fn branch_seams_are_continuous() {
        for q in [2u64, 3, 4] {
            for ti in 0..20 {
                let t = ti as f64 / 19.0;
                let shape = ChannelShape::hamming(q, t, 0.5);
                let p = &shape.profile;
                let low = 1.0 - ((1.0 - 2.0 * 0.5) * p.c11 + 2.0 * 0.5 * p.c12);
                let high = 1.0 - (2.0 * (1.0 - 0.5) * p.c12 + (2.0 * 0.5 - 1.0) * p.c22);
                assert!((low - high).abs() < TOL, "seam at q={q} t={t}");
            }
        }
    }

    #[test]
    fn comparison_identities_hamming_example() {
        let rep = ComparisonReport::hamming(2, 0.1, 0.2);
        assert!(rep.identity_residual < TOL);
        assert!(rep.gv_gap_residual < TOL);
        let expected = 0.2 * (f_q(2, 0.2) - f_q(2, 0.1));
        assert!(((rep.rates.r_gv - rep.rates.r_3lvl) - expected).abs() < TOL);
        let (sh, sgv) = rep.classical_slack.unwrap();
        assert!(sh >= -TOL && sgv >= -TOL);
    }

    #[test]
    fn comparison_identities_at_w_zero() {
        let rep = ComparisonReport::hamming(2, 0.3, 0.0);
        assert!((rep.rates.r_gv - rep.rates.r_3lvl).abs() < TOL);
        assert!((rep.rates.r_3lvl - rep.rates.r_2lvl).abs() < TOL);
    }

    #[test]
    fn comparison_skewed_profile() {
        // per-coordinate sizes 7, 9, 13 over GF(31): aligned case dominates
        let lq = (31f64).ln();
        let profile = AdmissibilityProfile::new(
            (3f64).ln() / lq,
            (5f64).ln() / lq,
            (7f64).ln() / lq,
            (9f64).ln() / lq,
            (13f64).ln() / lq,
        )
        .unwrap();
        let shape = ChannelShape::new(31, 0.3, profile.clone());
        let rep = ComparisonReport::from_shape(&shape, None);
        assert_eq!(rep.branch, GvBranch::Skewed);
        let expected = (profile.c12 - profile.c11) * 0.3;
        assert!(((rep.rates.r_gv - rep.rates.r_3lvl) - expected).abs() < TOL);
        assert!(rep.identity_residual < TOL);
        assert!(rep.gv_gap_residual < TOL);
    }

    #[test]
    fn rate_ordering_on_grid() {
        for ti in 0..50 {
            for wi in 0..50 {
                let t = ti as f64 / 49.0;
                let w = wi as f64 / 49.0;
                let p = RatePoint::hamming(2, t, w);
                assert!(p.r_gv <= p.r_h + 1e-12);
                assert!(p.r_2lvl <= p.r_3lvl + 1e-12);
                assert!(p.r_3lvl <= p.r_gv + 1e-12);
                assert!(p.r_classical_h <= p.r_h + 1e-12);
                assert!(p.r_classical_gv <= p.r_gv + 1e-12);
            }
        }
    }

    #[test]
    fn sweep_grid_values() {
        let rows = sweep(2, SweepMode::FixT(0.0), 11);
        assert_eq!(rows.len(), 11);
        for (_, p) in rows {
            assert!((p.r_h - 1.0).abs() < TOL);
            assert!((p.r_gv - 1.0).abs() < TOL);
        }
        let rows = sweep(2, SweepMode::FixW(0.3), 5);
        assert!((rows[2].0 - 0.5).abs() < TOL);
        assert!((rows[2].1.r_gv - 0.4).abs() < TOL);
        assert!((rows[2].1.r_h - 0.7).abs() < TOL);
    }
}
