use num_traits::{One, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::matrix::rational_det;

/// Monic greatest common divisor. `gcd(f, 0)` is `f` made monic.
pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    if !b.is_zero() {
        b = b.monic()?;
    }
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = if r.is_zero() { r } else { r.monic()? };
    }
    a.monic()
}

/// Iterated gcd over a non-empty list.
pub fn gcd_many<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Result<Poly> {
    let mut it = polys.into_iter();
    let first = it.next().ok_or(Error::EmptyIndexSet)?;
    let mut acc = first.clone();
    for p in it {
        if acc.is_zero() {
            acc = p.clone();
            continue;
        }
        acc = gcd(&acc, p)?;
        if acc.is_constant() {
            break;
        }
    }
    if acc.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    acc.monic()
}

/// Resultant through the Euclidean remainder sequence over the rationals.
///
/// The value equals the determinant of [`sylvester_matrix`] (rows of `f`
/// first, coefficients from the highest degree down), which is
/// `lead(f)^deg(g) · Π g(r)` over the roots `r` of `f`.
pub fn resultant(f: &Poly, g: &Poly) -> Result<Rational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut acc = Rational::one();
    loop {
        let n = a.deg();
        let m = b.deg();
        let lb = b.lead().expect("non-zero").clone();
        if m == 0 {
            return Ok(acc * lb.pow(n as i32));
        }
        let r = a.rem(&b)?;
        if r.is_zero() {
            return Ok(Rational::zero());
        }
        let rd = r.deg();
        if (n * m) % 2 == 1 {
            acc = -acc;
        }
        acc *= lb.pow((n - rd) as i32);
        a = b;
        b = r;
    }
}

/// Sylvester matrix with the `deg g` shifted rows of `f` first.
pub fn sylvester_matrix(f: &Poly, g: &Poly) -> Vec<Vec<Rational>> {
    let n = f.deg();
    let m = g.deg();
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for (count, p) in [(m, f), (n, g)] {
        let high_first: Vec<Rational> = p.coeffs().iter().rev().cloned().collect();
        for shift in 0..count {
            let mut row = vec![Rational::zero(); size];
            for (j, c) in high_first.iter().enumerate() {
                row[shift + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Resultant as the Bareiss determinant of the Sylvester matrix.
pub fn resultant_sylvester(f: &Poly, g: &Poly) -> Result<Rational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(rational_det(&sylvester_matrix(f, g)))
}

/// Yun's squarefree decomposition: monic, pairwise coprime, squarefree
/// parts `P_i` with `f / lead(f) = Π P_i^i`. Only non-constant parts are
/// returned, in increasing multiplicity.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let f = f.monic()?;
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let df = f.derivative(1);
    let a0 = gcd(&f, &df)?;
    let mut b = f.div_exact(&a0)?;
    let mut c = df.div_exact(&a0)?;
    let mut d = &c - &b.derivative(1);
    let mut parts = Vec::new();
    let mut i = 1u32;
    while !b.is_constant() {
        let a = if d.is_zero() { b.clone() } else { gcd(&b, &d)? };
        b = b.div_exact(&a)?;
        c = d.div_exact(&a)?;
        d = &c - &b.derivative(1);
        if !a.is_constant() {
            parts.push((a, i));
        }
        i += 1;
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        let f = Poly::from_roots(&[(rat(1, 1), 2), (rat(-2, 1), 1)]);
        assert_eq!(gcd(&f, &p(&[-1, 0, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(gcd(&f, &f.derivative(1)).unwrap(), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[2, 0, 1])).unwrap(), Poly::one());
        assert_eq!(gcd(&Poly::zero(), &Poly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(
            gcd(&p(&[2, 4]), &Poly::zero()).unwrap(),
            Poly::from_coeffs(vec![rat(1, 2), rat(1, 1)])
        );
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[-1, 1])).unwrap(), rat(0, 1));
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), rat(-1, 1));
        assert_eq!(resultant_sylvester(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), rat(-1, 1));
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])).unwrap(), rat(9, 1));
        assert_eq!(
            resultant_sylvester(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])).unwrap(),
            rat(9, 1)
        );
        assert_eq!(resultant(&p(&[3]), &p(&[1, 1, 1])).unwrap(), rat(9, 1));
        assert_eq!(resultant(&Poly::zero(), &p(&[1])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn resultant_sign_convention() {
        // deg 1 and deg 2: res(f, g) = lead(f)^2 g(root f); swapping args picks up (-1)^{1*2}
        let f = p(&[-2, 3]);
        let g = p(&[1, 0, 1]);
        let expected = rat(9, 1) * (rat(4, 9) + rat(1, 1));
        assert_eq!(resultant(&f, &g).unwrap(), expected);
        assert_eq!(resultant_sylvester(&f, &g).unwrap(), expected);
        let f = p(&[1, 1]);
        let g = p(&[5, 0, 0, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), rat(4, 1));
        assert_eq!(resultant_sylvester(&f, &g).unwrap(), rat(4, 1));
        assert_eq!(resultant(&g, &f).unwrap(), -resultant(&f, &g).unwrap());
    }

    #[test]
    fn squarefree_examples() {
        let f = Poly::from_roots(&[(rat(1, 1), 2), (rat(0, 1), 1)]);
        assert_eq!(
            squarefree_decomposition(&f).unwrap(),
            vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 2)]
        );
        assert_eq!(
            squarefree_decomposition(&p(&[1, 0, 1])).unwrap(),
            vec![(p(&[1, 0, 1]), 1)]
        );
        let g = Poly::from_roots(&[(rat(1, 1), 3), (rat(-1, 1), 3)]);
        assert_eq!(squarefree_decomposition(&g).unwrap(), vec![(p(&[-1, 0, 1]), 3)]);
        let h = p(&[0, 0, 0, 0, 6]);
        assert_eq!(squarefree_decomposition(&h).unwrap(), vec![(p(&[0, 1]), 4)]);
        assert_eq!(squarefree_decomposition(&Poly::zero()), Err(Error::ZeroPolynomial));
        assert!(squarefree_decomposition(&p(&[5])).unwrap().is_empty());
    }
}
