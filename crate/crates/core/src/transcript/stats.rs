use std::collections::BTreeMap;

use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::{EventSelector, Transcript};
use crate::error::{Error, Result};

/// Minimum number of observations per sample for [`chi_square_test`].
pub const MIN_SAMPLES: u64 = 50;

/// Histogram of revealed patterns.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RevealDistribution {
    pub histogram: BTreeMap<String, u64>,
    pub total: u64,
}

impl RevealDistribution {
    pub fn add(&mut self, pattern: impl Into<String>) {
        *self.histogram.entry(pattern.into()).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn frequency(&self, pattern: &str) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.histogram.get(pattern).copied().unwrap_or(0) as f64 / self.total as f64
    }
}

impl FromIterator<String> for RevealDistribution {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        let mut d = RevealDistribution::default();
        for p in iter {
            d.add(p);
        }
        d
    }
}

/// Histogram of the selected event's detail across transcripts. Transcripts
/// with no matching event contribute nothing.
pub fn reveal_distribution<'a>(
    ts: impl IntoIterator<Item = &'a Transcript>,
    selector: &EventSelector,
) -> RevealDistribution {
    ts.into_iter()
        .filter_map(|t| selector.select(t).map(|e| e.detail.clone()))
        .collect()
}

/// Histogram of the event skeleton (scope, step and action of every public
/// event, details dropped). Captures which branches a run took.
pub fn structure_distribution<'a>(ts: impl IntoIterator<Item = &'a Transcript>) -> RevealDistribution {
    ts.into_iter()
        .map(|t| {
            t.public_events()
                .iter()
                .map(|e| format!("{}|{}|{}", e.scope, e.step, e.action.name()))
                .collect::<Vec<_>>()
                .join(";")
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquare {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
}

/// Two-sample chi-square test of homogeneity over the pooled support.
pub fn chi_square_test(a: &RevealDistribution, b: &RevealDistribution) -> Result<ChiSquare> {
    for d in [a, b] {
        if d.total < MIN_SAMPLES {
            return Err(Error::InsufficientSamples {
                total: d.total,
                needed: MIN_SAMPLES,
            });
        }
    }
    let mut support: Vec<&String> = a.histogram.keys().chain(b.histogram.keys()).collect();
    support.sort();
    support.dedup();
    let (na, nb) = (a.total as f64, b.total as f64);
    let n = na + nb;
    let mut statistic = 0.0;
    for key in &support {
        let oa = a.histogram.get(*key).copied().unwrap_or(0) as f64;
        let ob = b.histogram.get(*key).copied().unwrap_or(0) as f64;
        let pooled = oa + ob;
        for (obs, total) in [(oa, na), (ob, nb)] {
            let expected = total * pooled / n;
            statistic += (obs - expected).powi(2) / expected;
        }
    }
    let dof = support.len().saturating_sub(1);
    let p_value = if dof == 0 || statistic == 0.0 {
        1.0
    } else {
        ChiSquared::new(dof as f64)
            .expect("positive degrees of freedom")
            .sf(statistic)
    };
    Ok(ChiSquare {
        statistic,
        dof,
        p_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(counts: &[(&str, u64)]) -> RevealDistribution {
        let mut d = RevealDistribution::default();
        for &(k, c) in counts {
            d.histogram.insert(k.to_string(), c);
            d.total += c;
        }
        d
    }

    #[test]
    fn identical_histograms_give_p_one() {
        let a = dist(&[("x", 300), ("y", 200), ("z", 100)]);
        let r = chi_square_test(&a, &a.clone()).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.p_value, 1.0);
    }

    #[test]
    fn reordered_support_gives_p_one() {
        let a = dist(&[("x", 300), ("y", 200)]);
        let b = dist(&[("y", 200), ("x", 300)]);
        assert_eq!(chi_square_test(&a, &b).unwrap().p_value, 1.0);
    }

    #[test]
    fn skewed_two_bin_example() {
        // Closed form: expected counts 6500/3500 per sample; each sample
        // contributes 1500^2/6500 + 1500^2/3500.
        let a = dist(&[("x", 8000), ("y", 2000)]);
        let b = dist(&[("x", 5000), ("y", 5000)]);
        let r = chi_square_test(&a, &b).unwrap();
        let expected = 2.0 * (1500.0f64.powi(2) / 6500.0 + 1500.0f64.powi(2) / 3500.0);
        assert!((r.statistic - expected).abs() < 1e-9);
        assert_eq!(r.dof, 1);
        assert!(r.p_value < 1e-6);
    }

    #[test]
    fn p_value_matches_known_quantile() {
        // Statistic 8 on one degree of freedom: p = erfc(2).
        let a = dist(&[("x", 60), ("y", 40)]);
        let b = dist(&[("x", 40), ("y", 60)]);
        let r = chi_square_test(&a, &b).unwrap();
        assert!((r.statistic - 8.0).abs() < 1e-12);
        assert!((r.p_value - 0.004_677_734_981_047_266).abs() < 1e-12);
    }

    #[test]
    fn insufficient_samples() {
        let a = dist(&[("x", 30)]);
        let b = dist(&[("x", 300)]);
        assert_eq!(
            chi_square_test(&a, &b),
            Err(Error::InsufficientSamples { total: 30, needed: 50 })
        );
    }

    #[test]
    fn degenerate_and_empty_histograms() {
        let t = Transcript::new("ham", 0);
        let sel = EventSelector {
            scope: None,
            step: Some("STEP4"),
            action: None,
            occurrence: 0,
        };
        assert!(reveal_distribution([&t], &sel).is_empty());
        let mut t2 = t.clone();
        t2.push_public(super::super::Scope::Global, "STEP4", super::super::Action::Reveal, "H / H / S");
        let d = reveal_distribution([&t2], &sel);
        assert_eq!(d.total, 1);
        assert_eq!(d.frequency("H / H / S"), 1.0);
    }
}
