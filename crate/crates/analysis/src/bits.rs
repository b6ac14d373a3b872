use crate::error::{AnalysisError, Result};

/// Fraction of differing bits between two equal-length byte strings.
/// Two empty inputs compare as identical.
pub fn bit_difference_ratio(a: &[u8], b: &[u8]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(AnalysisError::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Ok(0.0);
    }
    let differing: u64 = a.iter().zip(b).map(|(x, y)| u64::from((x ^ y).count_ones())).sum();
    Ok(differing as f64 / (8 * a.len()) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        let a = [0x5Au8, 0x00, 0xFF];
        assert_eq!(bit_difference_ratio(&a, &a).unwrap(), 0.0);
        let complement: Vec<u8> = a.iter().map(|v| !v).collect();
        assert_eq!(bit_difference_ratio(&a, &complement).unwrap(), 1.0);
        assert_eq!(bit_difference_ratio(&[0x0F], &[0x00]).unwrap(), 0.5);
        assert_eq!(bit_difference_ratio(&[1], &[1, 2]), Err(AnalysisError::LengthMismatch(1, 2)));
    }
}
