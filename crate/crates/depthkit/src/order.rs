//! Order-statistic conventions used throughout the crate.
//!
//! Every quantile in this crate is the lower empirical quantile: the
//! ⌈αn⌉-th order statistic, realizing `inf{r : empirical mass ≤ r is ≥ α}`.
//! The median is the α = 1/2 case, i.e. the ⌈n/2⌉-th order statistic.

/// Zero-based index of the ⌈n/2⌉-th order statistic (the lower median).
pub(crate) fn lower_median_index(n: usize) -> usize {
    debug_assert!(n >= 1);
    (n - 1) / 2
}

/// Zero-based index of the ⌈αn⌉-th order statistic for `alpha` in (0, 1).
///
/// The product `α·n` is snapped to the nearest integer when within 1e-9 of
/// one, so that exactly representable levels (0.05 · 500 = 25, …) never get
/// pushed up a rank by float roundoff.
pub(crate) fn lower_quantile_index(n: usize, alpha: f64) -> usize {
    debug_assert!(n >= 1 && alpha > 0.0 && alpha < 1.0);
    let t = alpha * n as f64;
    let k = if (t - t.round()).abs() < 1e-9 { t.round() } else { t.ceil() };
    (k as usize).clamp(1, n) - 1
}

/// Selects the k-th smallest value (0-based) in expected O(n) time.
pub(crate) fn select_kth(values: &mut [f64], k: usize) -> f64 {
    debug_assert!(k < values.len());
    let (_, kth, _) = values.select_nth_unstable_by(k, f64::total_cmp);
    *kth
}

/// Lower median of a scratch buffer, destroying its order.
pub(crate) fn lower_median(values: &mut [f64]) -> f64 {
    select_kth(values, lower_median_index(values.len()))
}

/// Fraction of entries in an ascending-sorted slice strictly greater than `x`.
///
/// This is the depth transform `P(score(X) > score(v))`: tied scores share a
/// depth, and the convention is strict-greater counting.
pub(crate) fn fraction_strictly_greater(sorted: &[f64], x: f64) -> f64 {
    let at_most = sorted.partition_point(|s| *s <= x);
    (sorted.len() - at_most) as f64 / sorted.len() as f64
}
