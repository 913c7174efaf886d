//! Expected document frequency under random-scatter models.
//!
//! If a word's `cf` total occurrences were thrown at `N` documents at
//! random, how many distinct documents should it land in? Words that are
//! spread evenly (function words, boilerplate) match that expectation;
//! topical words clump into few documents and fall well short of it. The
//! ratio of expected to observed document frequency is therefore a
//! randomness score, and it is what the stoplist generator thresholds.
//!
//! Two scatter models are provided. Under a Poisson occupancy model the
//! expected count is
//!
//! ```text
//! E[df] = N * (1 - exp(-cf/N))
//! ```
//!
//! and under a negative binomial model with dispersion `r > 0`
//!
//! ```text
//! E[df] = N * (1 - (1 + cf/(N*r))^(-r))
//! ```
//!
//! which allows the per-document counts to be burstier than Poisson and
//! recovers the Poisson curve as `r -> infinity`. The dispersion that best
//! explains a corpus is found by [`fit_negbin_r`], a least-squares fit in
//! log space over the observed `(cf, df)` pairs.

use crate::error::{Error, Result};
use crate::stats::{TermStats, TermStatsTable};

/// Search bracket for the dispersion fit.
pub const R_SEARCH_MIN: f64 = 1e-3;
pub const R_SEARCH_MAX: f64 = 1e3;

/// Relative tolerance on the fitted dispersion.
const FIT_REL_TOL: f64 = 1e-6;

/// How close (in log space) to the bracket edge counts as "converged onto
/// the boundary" — i.e. the data wanted a dispersion outside the bracket.
const BOUNDARY_MARGIN: f64 = 1e-3;

/// Which scatter model to evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelKind {
    Poisson,
    NegativeBinomial { r: f64 },
}

impl ModelKind {
    /// Short machine-friendly name (used in file headers and CSV columns).
    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::Poisson => "poisson",
            ModelKind::NegativeBinomial { .. } => "negbin",
        }
    }
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelKind::Poisson => write!(f, "poisson"),
            ModelKind::NegativeBinomial { r } => write!(f, "negbin(r={r})"),
        }
    }
}

/// A scatter model bound to a corpus size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OccurrenceModel {
    kind: ModelKind,
    doc_count: u64,
}

impl OccurrenceModel {
    pub fn poisson(doc_count: u64) -> Result<Self> {
        if doc_count == 0 {
            return Err(Error::EmptyCorpus);
        }
        Ok(Self {
            kind: ModelKind::Poisson,
            doc_count,
        })
    }

    pub fn negative_binomial(doc_count: u64, r: f64) -> Result<Self> {
        if doc_count == 0 {
            return Err(Error::EmptyCorpus);
        }
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidDispersion { r });
        }
        Ok(Self {
            kind: ModelKind::NegativeBinomial { r },
            doc_count,
        })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn doc_count(&self) -> u64 {
        self.doc_count
    }

    /// Expected number of distinct documents containing a word of total
    /// occurrence count `cf`, were its occurrences scattered at random.
    /// Defined for any real `cf >= 0`; the result is in `[0, min(cf, N)]`.
    pub fn expected_df(&self, cf: f64) -> Result<f64> {
        if !(cf >= 0.0) {
            // Also catches NaN.
            return Err(Error::NegativeCollectionFreq { cf });
        }
        let n = self.doc_count as f64;
        let mu = cf / n;
        // Both branches are written around exp_m1/ln_1p so small-mu words
        // (the interesting ones: cf << N) don't lose precision to the
        // cancellation in 1 - exp(-mu).
        let raw = match self.kind {
            ModelKind::Poisson => -n * (-mu).exp_m1(),
            ModelKind::NegativeBinomial { r } => -n * (-r * (mu / r).ln_1p()).exp_m1(),
        };
        // A word occurring cf times can reach at most cf documents (and at
        // most all N); clamp away the ulp of overshoot the float evaluation
        // can produce at tiny mu.
        Ok(raw.min(cf).min(n).max(0.0))
    }
}

/// Expected over observed document frequency for one word. Greater than 1
/// means the word is spread more widely than random scatter predicts
/// (absurd for content, typical for function words — those get stoplisted);
/// well below 1 means it clumps into few documents.
pub fn randomness_ratio(stats: &TermStats, model: &OccurrenceModel) -> Result<f64> {
    if stats.doc_freq == 0 {
        return Err(Error::ZeroDocFreq);
    }
    Ok(model.expected_df(stats.collection_freq as f64)? / stats.doc_freq as f64)
}

/// Outcome of [`fit_negbin_r`].
#[derive(Debug, Clone, Copy)]
pub struct NegBinFit {
    pub model: OccurrenceModel,
    pub r: f64,
    /// The minimizer landed on the edge of the search bracket — the data is
    /// better explained by a dispersion outside `[R_SEARCH_MIN, R_SEARCH_MAX]`
    /// (flat or one-sided objective), so treat `r` with suspicion.
    pub at_boundary: bool,
    /// Sum of squared log-residuals at the fitted dispersion.
    pub objective: f64,
}

/// Fit the negative binomial dispersion to a corpus: minimize
/// `sum_w (ln E[df](cf_w; r) - ln df_w)^2` over `r` in
/// `[R_SEARCH_MIN, R_SEARCH_MAX]`, every vocabulary word contributing one
/// residual. The search runs golden-section on `ln r`, which makes the
/// stopping tolerance relative in `r`.
pub fn fit_negbin_r(table: &TermStatsTable) -> Result<NegBinFit> {
    if table.is_empty() {
        return Err(Error::EmptyTermTable);
    }
    let doc_count = table.doc_count();

    let objective = |t: f64| -> f64 {
        let model = OccurrenceModel::negative_binomial(doc_count, t.exp())
            .expect("bracket keeps r positive and finite");
        // Fixed iteration order (lexicographic) keeps the sum bit-stable.
        table
            .entries()
            .map(|(_, stats)| {
                let expected = model
                    .expected_df(stats.collection_freq as f64)
                    .expect("cf is a count");
                let residual = expected.ln() - (stats.doc_freq as f64).ln();
                residual * residual
            })
            .sum()
    };

    let (t_lo, t_hi) = (R_SEARCH_MIN.ln(), R_SEARCH_MAX.ln());
    let t_star = golden_section_min(objective, t_lo, t_hi, FIT_REL_TOL);
    let at_boundary = t_star - t_lo < BOUNDARY_MARGIN || t_hi - t_star < BOUNDARY_MARGIN;
    let r = t_star.exp();
    Ok(NegBinFit {
        model: OccurrenceModel::negative_binomial(doc_count, r)?,
        r,
        at_boundary,
        objective: objective(t_star),
    })
}

/// Golden-section minimization of a unimodal `f` on `[lo, hi]`, to an
/// interval of width `tol`. Returns the interval midpoint.
fn golden_section_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}
