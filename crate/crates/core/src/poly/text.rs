use super::Poly;
use crate::error::Result;
use crate::exactnum::parse_rational;

/// Parses a comma-separated coefficient list, lowest degree first.
pub fn parse_coeffs(s: &str) -> Result<Poly> {
    let coeffs = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// Canonical coefficient list; the zero polynomial is `0`.
pub fn format_coeffs(f: &Poly) -> String {
    if f.is_zero() {
        return "0".to_owned();
    }
    f.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
