//! Alphabet-size economy: cost per bit of information gain.
//!
//! The gain of an N-symbol alphabet is log₂N; the cost is modeled as a power
//! law N^i with configurable exponent. The ratio g(N) = N^i / log₂N has a
//! single interior minimum (at ln N = 1/i for the continuous relaxation), and
//! [`argmin_integer`] pins the best integer N by exhaustive scan.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A power-law cost model f₁(N) = N^exponent with exponent > 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CostModel {
    exponent: f64,
}

impl CostModel {
    pub fn new(exponent: f64) -> Result<CostModel> {
        if !exponent.is_finite() || exponent <= 0.0 {
            return Err(Error::InvalidExponent(exponent));
        }
        Ok(CostModel { exponent })
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn cost(&self, n: usize) -> f64 {
        (n as f64).powf(self.exponent)
    }
}

/// Information gain of an N-symbol alphabet relative to binary: log₂N.
pub fn gain(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::GainUndefined(n));
    }
    Ok((n as f64).log2())
}

/// Cost per gain, g(N) = f₁(N) / f₂(N).
pub fn ratio(n: usize, model: &CostModel) -> Result<f64> {
    Ok(model.cost(n) / gain(n)?)
}

/// The integer N in [2, n_max] minimizing the ratio, by exhaustive scan.
/// Ties break toward smaller N.
pub fn argmin_integer(model: &CostModel, n_max: usize) -> usize {
    assert!(n_max >= 2, "scan domain starts at N = 2");
    let mut best_n = 2;
    let mut best = ratio(2, model).expect("N >= 2");
    for n in 3..=n_max {
        let r = ratio(n, model).expect("N >= 2");
        if r < best {
            best = r;
            best_n = n;
        }
    }
    best_n
}

/// The two integers bracketing the continuous minimum ln N = 1/i, clamped
/// to the scan domain. Any scan argmin must land in this set.
pub fn continuous_candidates(model: &CostModel) -> (usize, usize) {
    let n_star = (1.0 / model.exponent()).exp();
    let lo = (n_star.floor() as usize).max(2);
    let hi = (n_star.ceil() as usize).max(2);
    (lo, hi)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveRow {
    pub n: usize,
    pub cost: f64,
    pub gain: f64,
    pub ratio: f64,
}

/// Sampled (N, cost, gain, ratio) rows over a contiguous range of N.
#[derive(Clone, Debug, PartialEq)]
pub struct EfficiencyCurve {
    rows: Vec<CurveRow>,
}

impl EfficiencyCurve {
    pub fn rows(&self) -> &[CurveRow] {
        &self.rows
    }

    pub fn min_ratio_row(&self) -> &CurveRow {
        self.rows
            .iter()
            .min_by(|a, b| a.ratio.partial_cmp(&b.ratio).expect("finite ratios"))
            .expect("curve is never empty")
    }

    /// Comma-separated text with a `N,cost,gain,ratio` header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,cost,gain,ratio\n");
        for row in &self.rows {
            let _ = writeln!(out, "{},{},{},{}", row.n, row.cost, row.gain, row.ratio);
        }
        out
    }
}

/// Tabulates the model over N in [n_min, n_max].
pub fn curve(model: &CostModel, n_min: usize, n_max: usize) -> EfficiencyCurve {
    assert!(2 <= n_min && n_min <= n_max, "need 2 <= n_min <= n_max");
    let rows = (n_min..=n_max)
        .map(|n| CurveRow {
            n,
            cost: model.cost(n),
            gain: gain(n).expect("N >= 2"),
            ratio: ratio(n, model).expect("N >= 2"),
        })
        .collect();
    EfficiencyCurve { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(i: f64) -> CostModel {
        CostModel::new(i).unwrap()
    }

    #[test]
    fn gain_values() {
        assert_eq!(gain(2).unwrap(), 1.0);
        assert_eq!(gain(8).unwrap(), 3.0);
        assert!(gain(1).is_err());
        assert!(gain(0).is_err());
    }

    #[test]
    fn invalid_exponents_rejected() {
        assert!(CostModel::new(0.0).is_err());
        assert!(CostModel::new(-1.0).is_err());
        assert!(CostModel::new(f64::NAN).is_err());
        assert!(CostModel::new(f64::INFINITY).is_err());
    }

    #[test]
    fn ratio_values() {
        assert_eq!(ratio(4, &model(1.0)).unwrap(), 2.0);
        let r3 = ratio(3, &model(1.0)).unwrap();
        assert!((r3 - 1.8928).abs() < 1e-4);
        let r20 = ratio(20, &model(1.0 / 3.0)).unwrap();
        assert!((r20 - 0.6281).abs() < 1e-4);
    }

    #[test]
    fn argmin_for_cube_root_cost_is_twenty() {
        assert_eq!(argmin_integer(&model(1.0 / 3.0), 10_000), 20);
    }

    #[test]
    fn argmin_for_other_exponents() {
        assert_eq!(argmin_integer(&model(1.0), 10_000), 3);
        assert_eq!(argmin_integer(&model(2.0), 10_000), 2);
        assert_eq!(argmin_integer(&model(0.5), 10_000), 7);
    }

    #[test]
    fn argmin_lands_in_continuous_candidate_set() {
        for i in [0.25, 1.0 / 3.0, 0.5, 1.0, 2.0, 3.0, 4.0] {
            let m = model(i);
            let best = argmin_integer(&m, 10_000);
            let (lo, hi) = continuous_candidates(&m);
            assert!(
                best == lo || best == hi,
                "i={i}: argmin {best} outside {{{lo}, {hi}}}"
            );
        }
    }

    #[test]
    fn argmin_stable_once_domain_covers_candidates() {
        for i in [0.25, 1.0 / 3.0, 0.5, 1.0, 2.0] {
            let m = model(i);
            assert_eq!(argmin_integer(&m, 100), argmin_integer(&m, 10_000));
        }
    }

    #[test]
    fn curve_shape() {
        let c = curve(&model(1.0 / 3.0), 2, 100);
        assert_eq!(c.rows().len(), 99);
        assert_eq!(c.min_ratio_row().n, 20);

        let single = curve(&model(1.0 / 3.0), 20, 20);
        assert_eq!(single.rows().len(), 1);
        assert_eq!(single.rows()[0].n, 20);
    }

    #[test]
    fn steep_cost_rises_after_two() {
        let c = curve(&model(4.0), 2, 10);
        let ratios: Vec<f64> = c.rows().iter().map(|r| r.ratio).collect();
        for pair in ratios.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn monotone_cost_and_gain() {
        let m = model(0.5);
        for n in 2..200 {
            assert!(gain(n + 1).unwrap() > gain(n).unwrap());
            assert!(m.cost(n + 1) > m.cost(n));
        }
    }

    #[test]
    fn csv_header_and_rows() {
        let c = curve(&model(1.0), 2, 4);
        let csv = c.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("N,cost,gain,ratio"));
        assert_eq!(lines.next(), Some("2,2,1,2"));
        assert!(csv.lines().count() == 4);
    }
}
