//! The Arctan-X transform: `G(x) = (4/π)·arctan(H(x))` for any base CDF `H`.
//!
//! Because `1 + H² ∈ [1, 2]`, the transformed density stays within a factor
//! `[2/π, 4/π]` of the base density everywhere.

use std::f64::consts::FRAC_PI_4;

/// Closed interval of support; either bound may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub lower: f64,
    pub upper: f64,
}

impl Support {
    pub const REAL_LINE: Support = Support {
        lower: f64::NEG_INFINITY,
        upper: f64::INFINITY,
    };

    pub const POSITIVE: Support = Support {
        lower: 0.0,
        upper: f64::INFINITY,
    };

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lower && x <= self.upper
    }
}

/// A continuous distribution that can serve as the base of the transform.
pub trait BaseDistribution {
    fn cdf(&self, x: f64) -> f64;
    fn pdf(&self, x: f64) -> f64;
    fn support(&self) -> Support;
    fn param_count(&self) -> usize;
}

impl<B: BaseDistribution + ?Sized> BaseDistribution for &B {
    fn cdf(&self, x: f64) -> f64 {
        (**self).cdf(x)
    }
    fn pdf(&self, x: f64) -> f64 {
        (**self).pdf(x)
    }
    fn support(&self) -> Support {
        (**self).support()
    }
    fn param_count(&self) -> usize {
        (**self).param_count()
    }
}

/// Maps a base CDF value through `(4/π)·arctan`.
#[inline]
pub fn transform_cdf_value(h: f64) -> f64 {
    h.atan() / FRAC_PI_4
}

/// Transformed density given the base density and base CDF at the same point.
#[inline]
pub fn transform_pdf_value(h_pdf: f64, h_cdf: f64) -> f64 {
    h_pdf / (FRAC_PI_4 * (1.0 + h_cdf * h_cdf))
}

pub fn arctan_cdf<B: BaseDistribution + ?Sized>(base: &B, x: f64) -> f64 {
    let support = base.support();
    if x <= support.lower {
        return 0.0;
    }
    if x >= support.upper {
        return 1.0;
    }
    transform_cdf_value(base.cdf(x).clamp(0.0, 1.0))
}

pub fn arctan_pdf<B: BaseDistribution + ?Sized>(base: &B, x: f64) -> f64 {
    if !base.support().contains(x) || x.is_infinite() {
        return 0.0;
    }
    let p = base.pdf(x);
    if p == 0.0 {
        return 0.0;
    }
    transform_pdf_value(p, base.cdf(x).clamp(0.0, 1.0))
}

/// A base distribution wrapped by the Arctan-X transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArctanX<B> {
    base: B,
}

impl<B: BaseDistribution> ArctanX<B> {
    pub fn new(base: B) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &B {
        &self.base
    }
}

impl<B: BaseDistribution> BaseDistribution for ArctanX<B> {
    fn cdf(&self, x: f64) -> f64 {
        arctan_cdf(&self.base, x)
    }

    fn pdf(&self, x: f64) -> f64 {
        arctan_pdf(&self.base, x)
    }

    fn support(&self) -> Support {
        self.base.support()
    }

    fn param_count(&self) -> usize {
        self.base.param_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_2_PI, PI};

    /// Fixed cdf/pdf values regardless of x, to exercise the transform formulas.
    struct Fixed {
        cdf: f64,
        pdf: f64,
    }

    impl BaseDistribution for Fixed {
        fn cdf(&self, _: f64) -> f64 {
            self.cdf
        }
        fn pdf(&self, _: f64) -> f64 {
            self.pdf
        }
        fn support(&self) -> Support {
            Support::REAL_LINE
        }
        fn param_count(&self) -> usize {
            0
        }
    }

    #[test]
    fn cdf_endpoints_and_midpoint() {
        assert_eq!(arctan_cdf(&Fixed { cdf: 0.0, pdf: 0.0 }, 0.0), 0.0);
        assert!((arctan_cdf(&Fixed { cdf: 1.0, pdf: 0.0 }, 0.0) - 1.0).abs() < 1e-15);
        let half = arctan_cdf(&Fixed { cdf: 0.5, pdf: 0.0 }, 0.0);
        // 4/π·atan(1/2), via atan(1/2) = 0.4636476090008061
        assert!((half - 4.0 / PI * 0.463_647_609_000_806_1).abs() < 1e-15);
        assert!((half - 0.590_334_470_601_733_1).abs() < 1e-12);
    }

    #[test]
    fn pdf_denominators() {
        assert_eq!(arctan_pdf(&Fixed { cdf: 0.3, pdf: 0.0 }, 0.0), 0.0);
        let p = 0.37;
        assert!((arctan_pdf(&Fixed { cdf: 0.0, pdf: p }, 0.0) - 4.0 / PI * p).abs() < 1e-15);
        assert!((arctan_pdf(&Fixed { cdf: 1.0, pdf: p }, 0.0) - FRAC_2_PI * p).abs() < 1e-15);
    }

    #[test]
    fn infinite_arguments_use_support() {
        let base = Fixed { cdf: 0.5, pdf: 1.0 };
        assert_eq!(arctan_cdf(&base, f64::NEG_INFINITY), 0.0);
        assert_eq!(arctan_cdf(&base, f64::INFINITY), 1.0);
        assert_eq!(arctan_pdf(&base, f64::INFINITY), 0.0);
    }
}
