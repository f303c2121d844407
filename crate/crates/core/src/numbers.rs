//! Exact Catalan and Narayana numbers.
//!
//! All arithmetic is carried out in `u128` with checked operations; an
//! intermediate that does not fit is reported as [`Error::Overflow`] instead
//! of wrapping.

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        // acc * (n - k + i) is always divisible by i at this point.
        acc = acc
            .checked_mul(n as u128 - k as u128 + i)
            .ok_or_else(|| Error::Overflow(format!("binomial({n}, {k})")))?
            / i;
    }
    Ok(acc)
}

/// Narayana number `N(n, k) = C(n, k) C(n, k - 1) / n`: noncrossing partitions
/// of `{1..n}` with exactly `k` blocks.
pub fn narayana(n: u64, k: u64) -> Result<u128> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::Validation(format!(
            "narayana({n}, {k}) requires 1 <= k <= n"
        )));
    }
    let a = binomial(n, k)?;
    let b = binomial(n, k - 1)?;
    let product = a
        .checked_mul(b)
        .ok_or_else(|| Error::Overflow(format!("narayana({n}, {k})")))?;
    debug_assert_eq!(product % n as u128, 0);
    Ok(product / n as u128)
}

/// The Narayana row `[N(n, 1), ..., N(n, n)]`.
pub fn narayana_row(n: u64) -> Result<Vec<u128>> {
    (1..=n).map(|k| narayana(n, k)).collect()
}

/// Catalan number computed as the sum of the Narayana row.
pub fn catalan(n: u64) -> Result<u128> {
    if n == 0 {
        return Ok(1);
    }
    narayana_row(n)?.into_iter().try_fold(0u128, |acc, x| {
        acc.checked_add(x)
            .ok_or_else(|| Error::Overflow(format!("catalan({n})")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Catalan numbers via the convolution recurrence, independent of the Narayana sum.
    fn catalan_by_recurrence(n: usize) -> Vec<u128> {
        let mut c = vec![1u128];
        for m in 1..=n {
            let s = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
            c.push(s);
        }
        c
    }

    #[test]
    fn catalan_matches_recurrence_up_to_30() {
        let expected = catalan_by_recurrence(30);
        for n in 0..=30u64 {
            assert_eq!(catalan(n).unwrap(), expected[n as usize], "n={n}");
        }
        assert_eq!(catalan(4).unwrap(), 14);
        assert_eq!(catalan(12).unwrap(), 208_012);
    }

    #[test]
    fn narayana_small_values() {
        assert_eq!(narayana_row(4).unwrap(), vec![1, 6, 6, 1]);
        for n in 1..=20 {
            assert_eq!(narayana(n, 1).unwrap(), 1);
            assert_eq!(narayana(n, n).unwrap(), 1);
        }
    }

    #[test]
    fn narayana_rejects_out_of_range() {
        assert!(matches!(narayana(4, 0), Err(Error::Validation(_))));
        assert!(matches!(narayana(4, 5), Err(Error::Validation(_))));
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(binomial(1000, 500), Err(Error::Overflow(_))));
        assert!(matches!(catalan(200), Err(Error::Overflow(_))));
    }
}
