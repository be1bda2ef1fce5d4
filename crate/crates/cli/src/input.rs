//! Polynomial input in either text form.

use caforge_core::poly::{format_coeffs, parse_coeffs};
use caforge_core::{FactoredPoly, Poly, Result};

use crate::certificate::InputRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum PolyFormat {
    /// Comma-separated rationals, constant term first: `-1,0,1`.
    #[default]
    Coeffs,
    /// Leading coefficient and roots: `1; 0^3, 1/2`.
    Roots,
}

#[derive(Clone, Debug)]
pub struct PolyInput {
    pub poly: Poly,
    pub factored: Option<FactoredPoly>,
}

impl PolyInput {
    pub fn parse(text: &str, format: PolyFormat) -> Result<Self> {
        match format {
            PolyFormat::Coeffs => Ok(PolyInput {
                poly: parse_coeffs(text)?,
                factored: None,
            }),
            PolyFormat::Roots => {
                let factored = FactoredPoly::parse(text)?;
                Ok(PolyInput {
                    poly: factored.to_poly()?,
                    factored: Some(factored),
                })
            }
        }
    }

    pub fn record(&self) -> InputRecord {
        InputRecord {
            coeffs: format_coeffs(&self.poly),
            factored: self.factored.as_ref().and_then(FactoredPoly::format),
        }
    }
}
