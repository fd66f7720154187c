use arctan_gr::dataset::LossDataset;
use arctan_gr::distributions::ArctanGRParams;
use arctan_gr::risk::{empirical_risk, mc_risk_curve, risk_curve, risk_row, ConfidenceLevel};

fn grid(n: usize) -> Vec<ConfidenceLevel> {
    (0..n)
        .map(|k| ConfidenceLevel::new(0.501 + 0.498 * k as f64 / (n - 1) as f64).unwrap())
        .collect()
}

#[test]
fn measures_are_monotone_in_alpha() {
    for (omega, psi) in [(0.02, 0.005), (0.0, 1.0), (-7.0, 12.0)] {
        let p = ArctanGRParams::new(omega, psi).unwrap();
        let rows = risk_curve(&p, &grid(50)).unwrap().rows;
        for w in rows.windows(2) {
            assert!(w[1].var > w[0].var);
            assert!(w[1].tvar > w[0].tvar);
        }
        for r in &rows {
            assert!(r.tvar > r.var);
            assert!(r.tv > 0.0);
        }
    }
}

#[test]
fn translation_and_scale_equivariance() {
    let base = ArctanGRParams::new(0.0, 1.0).unwrap();
    for alpha in grid(12) {
        let r0 = risk_row(&base, alpha).unwrap();
        for (omega, psi) in [(3.0, 1.0), (0.0, 0.01), (-2.5, 40.0)] {
            let p = ArctanGRParams::new(omega, psi).unwrap();
            let r = risk_row(&p, alpha).unwrap();
            let scale = psi.max(omega.abs());
            assert!((r.var - (omega + psi * r0.var)).abs() < 1e-12 * scale);
            assert!((r.tvar - (omega + psi * r0.tvar)).abs() < 1e-9 * scale);
            assert!((r.tv - psi * psi * r0.tv).abs() < 1e-8 * psi * psi * r0.tv);
        }
    }
}

#[test]
fn monte_carlo_curve_tracks_quadrature() {
    let p = ArctanGRParams::new(0.02, 0.005).unwrap();
    let alphas: Vec<_> = [0.6, 0.8, 0.95]
        .iter()
        .map(|&a| ConfidenceLevel::new(a).unwrap())
        .collect();
    let q = risk_curve(&p, &alphas).unwrap().rows;
    let mc = mc_risk_curve(&p, &alphas, 2_000_000, 9).unwrap().rows;
    for (a, b) in q.iter().zip(&mc) {
        assert!(((a.tvar - b.tvar) / a.tvar).abs() < 2e-3);
        assert!(((a.tv - b.tv) / a.tv).abs() < 5e-2);
    }
}

#[test]
fn empirical_measures_on_insurance_data() {
    let d = LossDataset::insurance();
    let r = empirical_risk(&d, 0.9).unwrap();
    assert!((r.var - 0.1027).abs() < 1e-12);
    assert!(r.tvar > r.var && r.tv >= 0.0);
    // a single value above the 99% quantile is too few for TVaR and TV
    assert!(empirical_risk(&d, 0.99).is_err());
    assert!(empirical_risk(&d, 1.0).is_err());
}
