use std::collections::BTreeMap;

use num_traits::Zero;

use super::Poly;
use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Root {
    Rational(Rational),
    /// A root known only numerically.
    Complex {
        re: f64,
        im: f64,
    },
}

/// `lead · Π (z - root)^mult`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredPoly {
    pub lead: Rational,
    pub roots: Vec<(Root, u32)>,
}

impl FactoredPoly {
    pub fn new(lead: Rational, roots: Vec<(Root, u32)>) -> Result<Self> {
        if lead.is_zero() {
            return Err(Error::InvalidArgument("leading coefficient must be non-zero".into()));
        }
        if roots.iter().any(|(_, m)| *m == 0) {
            return Err(Error::InvalidArgument("root multiplicities must be positive".into()));
        }
        Ok(FactoredPoly { lead, roots })
    }

    pub fn from_rational_roots(lead: Rational, roots: Vec<(Rational, u32)>) -> Result<Self> {
        FactoredPoly::new(lead, roots.into_iter().map(|(r, m)| (Root::Rational(r), m)).collect())
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|(_, m)| *m as usize).sum()
    }

    /// Distinct rational roots with merged multiplicities, sorted ascending.
    pub fn rational_roots(&self) -> Result<Vec<(Rational, u32)>> {
        let mut merged: BTreeMap<Rational, u32> = BTreeMap::new();
        for (root, m) in &self.roots {
            match root {
                Root::Rational(r) => *merged.entry(r.clone()).or_default() += m,
                Root::Complex { .. } => return Err(Error::IrrationalRoots),
            }
        }
        Ok(merged.into_iter().collect())
    }

    pub fn to_poly(&self) -> Result<Poly> {
        Ok(Poly::from_roots(&self.rational_roots()?).scale(&self.lead))
    }

    /// Parses `lead; root^mult, root^mult, ...`. A missing `^mult` means 1.
    pub fn parse(s: &str) -> Result<Self> {
        let (lead, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected `lead; roots` in {s:?}")))?;
        let lead = parse_rational(lead)?;
        let mut roots = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (root, mult) = match item.rsplit_once('^') {
                Some((r, m)) => {
                    let m: u32 = m
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad multiplicity in {item:?}")))?;
                    (r, m)
                }
                None => (item, 1),
            };
            roots.push((Root::Rational(parse_rational(root)?), mult));
        }
        FactoredPoly::new(lead, roots)
    }

    /// Canonical text form; `None` when a root is not rational.
    pub fn format(&self) -> Option<String> {
        let mut items = Vec::with_capacity(self.roots.len());
        for (root, m) in &self.roots {
            let Root::Rational(r) = root else { return None };
            items.push(if *m == 1 { r.to_string() } else { format!("{r}^{m}") });
        }
        Some(format!("{}; {}", self.lead, items.join(", ")))
    }
}
