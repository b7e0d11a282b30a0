//! Sparse multivariate polynomials over the rationals, plus the univariate
//! real-root counting used by the exact singularity decision.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::{sign, Rat};

/// Monomial: exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Multivariate polynomial as a term map monomial -> coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(e, Rat::from_integer(1.into()));
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(nvars: usize, coeffs: &[(usize, Rat)]) -> Self {
        let mut p = Poly::zero(nvars);
        for (i, c) in coeffs {
            if !c.is_zero() {
                let mut e = vec![0; nvars];
                e[*i] = 1;
                let entry = p.terms.entry(e).or_insert_with(Rat::zero);
                *entry += c;
            }
        }
        p.prune();
        p
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.iter().sum::<u32>() == degree)
    }

    pub fn add_assign(&mut self, other: &Poly) {
        assert_eq!(self.nvars, other.nvars);
        for (m, c) in &other.terms {
            let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        self.prune();
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), c * k)).collect(),
        }
    }

    /// Multiply by a degree-one polynomial given as sparse coefficients.
    pub fn mul_linear(&self, lin: &[(usize, Rat)]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            for (i, lc) in lin {
                if lc.is_zero() {
                    continue;
                }
                let mut e = m.clone();
                e[*i] += 1;
                let entry = out.terms.entry(e).or_insert_with(Rat::zero);
                *entry += c * lc;
            }
        }
        out.prune();
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Any monomial with a nonzero coefficient (the term-map minimum), if one exists.
    pub fn some_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next()
    }
}

/// Dense univariate polynomial, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Rat::from_integer(k.into()) * c)
                .collect(),
        )
    }

    /// Polynomial remainder of `self` by `other` (rational arithmetic).
    pub fn rem(&self, other: &UniPoly) -> UniPoly {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let d = other.degree();
        let lead = other.leading().unwrap().clone();
        while r.len() > d {
            let k = r.len() - 1;
            let f = r[k].clone() / &lead;
            if !f.is_zero() {
                for t in 0..=d {
                    let v = &r[k - d + t] - &f * &other.coeffs[t];
                    r[k - d + t] = v;
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            if r.len() <= d {
                break;
            }
        }
        UniPoly::new(r)
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // monic normalization
        let lead = a.leading().unwrap().clone();
        UniPoly::new(a.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn square_free_part(&self) -> UniPoly {
        if self.is_zero() || self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.div_exact(&g)
    }

    fn div_exact(&self, other: &UniPoly) -> UniPoly {
        let mut r = self.coeffs.clone();
        let d = other.degree();
        let lead = other.leading().unwrap().clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(d)];
        while r.len() > d {
            let k = r.len() - 1;
            let f = r[k].clone() / &lead;
            q[k - d] = f.clone();
            for t in 0..=d {
                let v = &r[k - d + t] - &f * &other.coeffs[t];
                r[k - d + t] = v;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        debug_assert!(UniPoly::new(r).is_zero(), "inexact polynomial division");
        UniPoly::new(q)
    }

    /// Number of distinct real roots, by Sturm's theorem over (-inf, +inf).
    pub fn count_real_roots(&self) -> usize {
        if self.is_zero() || self.degree() == 0 {
            return 0;
        }
        let p = self.square_free_part();
        if p.degree() == 0 {
            return 0;
        }
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]);
            chain.push(UniPoly::new(r.coeffs.iter().map(|c| -c.clone()).collect()));
        }
        chain.pop();
        let variations = |at_minus_inf: bool| {
            let mut count = 0;
            let mut last = 0i32;
            for q in &chain {
                if q.is_zero() {
                    continue;
                }
                let lead_sign = sign(q.leading().unwrap());
                let s = if at_minus_inf && q.degree() % 2 == 1 {
                    -lead_sign
                } else {
                    lead_sign
                };
                if s != 0 {
                    if last != 0 && s != last {
                        count += 1;
                    }
                    last = s;
                }
            }
            count
        };
        variations(true) - variations(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn real_root_counts() {
        // x^2 + 1: none
        assert_eq!(up(&[1, 0, 1]).count_real_roots(), 0);
        // x^2 - 1: two
        assert_eq!(up(&[-1, 0, 1]).count_real_roots(), 2);
        // x^3 - x = x(x-1)(x+1): three
        assert_eq!(up(&[0, -1, 0, 1]).count_real_roots(), 3);
        // (x^2+1)^2: none
        assert_eq!(up(&[1, 0, 2, 0, 1]).count_real_roots(), 0);
        // x^2 (double root at 0): one distinct
        assert_eq!(up(&[0, 0, 1]).count_real_roots(), 1);
        // (x-2)^2 (x^2+3): one distinct
        let p = up(&[12, -12, 7, -4, 1]);
        assert_eq!(p.count_real_roots(), 1);
    }

    #[test]
    fn poly_eval_and_structure() {
        // p = x0^2 x1 - 2 x1
        let x0 = Poly::var(2, 0);
        let x1 = Poly::var(2, 1);
        let mut p = x0.mul_linear(&[(0, rat(1))]).mul_linear(&[(1, rat(1))]);
        p.add_assign(&x1.scale(&rat(-2)));
        assert_eq!(p.total_degree(), 3);
        assert_eq!(p.eval(&[rat(3), rat(5)]), rat(35));
        assert!(!p.is_homogeneous(3));
    }

    #[test]
    fn square_free() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let p = up(&[2, -3, 0, 1]);
        let sf = p.square_free_part();
        assert_eq!(sf.degree(), 2);
        assert!(sf.eval(&rat(1)).is_zero());
        assert!(sf.eval(&rat(-2)).is_zero());
    }
}
