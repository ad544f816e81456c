//! Exact arithmetic in `F_{p^n}`.
//!
//! An element is stored as its integer code: the coefficient of `t^i` in
//! the polynomial representative is the `i`-th base-`p` digit of the code.
//! The field owns the modulus and performs all arithmetic, so elements are
//! plain `Copy` values that are only meaningful together with their field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const FIELD_SIZE_CAP: u64 = 1 << 16;

const MAX_DEGREE: usize = 16;

/// An element of a [`FiniteField`], identified by its base-`p` digit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn from_code(code: u32) -> Self {
        Elem(code)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The finite field `F_{p^n} = F_p[t] / (modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    n: u32,
    q: u32,
    /// Monic modulus, coefficient of `t^i` at position `i` (length `n + 1`).
    modulus: Vec<u32>,
}

impl FiniteField {
    /// Builds `F_{p^n}` using the lexicographically smallest irreducible
    /// monic modulus of degree `n`, comparing coefficient sequences from the
    /// constant term up. For `n = 1` this is the polynomial `t`.
    pub fn new(p: u32, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n < 1 {
            return Err(Error::BadDegree(n));
        }
        let q = (p as u64).checked_pow(n).filter(|&q| q <= FIELD_SIZE_CAP);
        let Some(q) = q else {
            return Err(Error::FieldTooLarge { p, n, cap: FIELD_SIZE_CAP });
        };
        let modulus = smallest_irreducible(p, n as usize);
        Ok(FiniteField { p, n, q: q as u32, modulus })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elem(&self, code: u64) -> Result<Elem> {
        if code < self.q as u64 {
            Ok(Elem(code as u32))
        } else {
            Err(Error::ElementOutOfRange { code, q: self.q })
        }
    }

    /// The image of the integer `k` under `Z -> F_p`.
    pub fn from_int(&self, k: i64) -> Elem {
        Elem(k.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(Elem)
    }

    /// Coefficients of the polynomial representative of `a`.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        self.digits(a)[..self.n as usize].to_vec()
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.n as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::ElementParse(format!("{coeffs:?}")));
        }
        let mut d = [0u32; MAX_DEGREE];
        d[..coeffs.len()].copy_from_slice(coeffs);
        Ok(self.undigits(&d))
    }

    fn digits(&self, a: Elem) -> [u32; MAX_DEGREE] {
        let mut d = [0u32; MAX_DEGREE];
        let mut x = a.0;
        for slot in d.iter_mut().take(self.n as usize) {
            *slot = x % self.p;
            x /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> Elem {
        let mut code = 0u32;
        for &c in d[..self.n as usize].iter().rev() {
            code = code * self.p + c;
        }
        Elem(code)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.n == 1 {
            return Elem((a.0 + b.0) % self.p);
        }
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut z = [0u32; MAX_DEGREE];
        for i in 0..self.n as usize {
            z[i] = (x[i] + y[i]) % self.p;
        }
        self.undigits(&z)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let x = self.digits(a);
        let mut z = [0u32; MAX_DEGREE];
        for i in 0..self.n as usize {
            z[i] = (self.p - x[i]) % self.p;
        }
        self.undigits(&z)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.n == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let n = self.n as usize;
        let p = self.p as u64;
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % p;
            }
        }
        // t^n = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1})
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let m = self.modulus[i] as u64;
                prod[k - n + i] = (prod[k - n + i] + (p - c) * m) % p;
            }
        }
        let mut z = [0u32; MAX_DEGREE];
        for i in 0..n {
            z[i] = prod[i] as u32;
        }
        self.undigits(&z)
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Elem(inv_mod(a.0, self.p)));
        }
        let coeffs = self.coefficients(a);
        let inv = poly::inverse_mod(&coeffs, &self.modulus, self.p);
        let mut d = [0u32; MAX_DEGREE];
        d[..inv.len()].copy_from_slice(&inv);
        Ok(self.undigits(&d))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` by repeated squaring; `0^0 = 1`.
    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// The Frobenius automorphism `x -> x^(p^i)`, with `i` taken mod `n`.
    pub fn frobenius(&self, x: Elem, i: u32) -> Elem {
        let i = i % self.n;
        (0..i).fold(x, |acc, _| self.pow(acc, self.p as u64))
    }

    pub fn multiplicative_order(&self, a: Elem) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != Elem::ONE {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    pub fn is_square(&self, a: Elem) -> bool {
        a.is_zero() || self.p == 2 || self.pow(a, (self.q as u64 - 1) / 2) == Elem::ONE
    }

    /// Parses either an integer code or a polynomial form such as `1+2*t+t^2`.
    pub fn parse(&self, text: &str) -> Result<Elem> {
        let text = text.trim();
        if let Ok(code) = text.parse::<u64>() {
            return self.elem(code);
        }
        self.parse_poly(text)
    }

    /// Parses the polynomial form `c0+c1*t+c2*t^2+...`; terms may appear in
    /// any order and a bare `t` or `t^k` means coefficient 1.
    pub fn parse_poly(&self, text: &str) -> Result<Elem> {
        let bad = || Error::ElementParse(text.to_string());
        let mut d = [0u32; MAX_DEGREE];
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        for term in compact.split('+') {
            let (coeff, power) = match term.split_once('t') {
                None => (term, 0usize),
                Some((c, rest)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let c = if c.is_empty() { "1" } else { c };
                    let power = match rest.strip_prefix('^') {
                        Some(k) => k.parse::<usize>().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (c, power)
                }
            };
            let c: u64 = coeff.parse().map_err(|_| bad())?;
            if power >= self.n as usize {
                return Err(bad());
            }
            d[power] = ((d[power] as u64 + c) % self.p as u64) as u32;
        }
        Ok(self.undigits(&d))
    }

    pub fn format_poly(&self, a: Elem) -> String {
        let d = self.digits(a);
        let terms: Vec<String> = (0..self.n as usize)
            .filter(|&i| d[i] != 0)
            .map(|i| match (i, d[i]) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// `x^2 - r x + s`, rejected with a witness root when reducible.
    pub fn quadratic(&self, r: Elem, s: Elem) -> Result<Quadratic> {
        let f = Quadratic { r, s };
        match f.find_root(self) {
            Some(root) => Err(Error::Reducible { r: r.0, s: s.0, root: root.0 }),
            None => Ok(f),
        }
    }

    /// All irreducible monic quadratics, in `(r, s)` code order.
    pub fn irreducible_quadratics(&self) -> Vec<Quadratic> {
        let mut out = Vec::new();
        for r in self.elements() {
            for s in self.nonzero_elements() {
                let f = Quadratic { r, s };
                if f.is_irreducible(self) {
                    out.push(f);
                }
            }
        }
        out
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    t0.rem_euclid(p as i64) as u32
}

fn smallest_irreducible(p: u32, n: usize) -> Vec<u32> {
    let total = (p as u64).pow(n as u32);
    for k in 0..total {
        // c_0 is the most significant digit of k
        let mut coeffs = vec![0u32; n + 1];
        let mut x = k;
        for i in (0..n).rev() {
            coeffs[i] = (x % p as u64) as u32;
            x /= p as u64;
        }
        coeffs[n] = 1;
        if poly::is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// Dense polynomials over `F_p`, lowest coefficient first.
mod poly {
    fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_scalar(a: u32, p: u32) -> u32 {
        super::inv_mod(a, p)
    }

    pub(super) fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        divrem(a, b, p).1
    }

    fn divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_scalar(b[db], p) as u64;
        let mut quot = vec![0u32; r.len().saturating_sub(db).max(1)];
        while r.len() > db && !r.is_empty() {
            let shift = r.len() - 1 - db;
            let c = (r[r.len() - 1] as u64 * lead_inv % p as u64) as u32;
            quot[shift] = c;
            for (i, &bi) in b.iter().enumerate() {
                let sub = c as u64 * bi as u64 % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            r = trim(r);
        }
        (trim(quot), r)
    }

    fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let len = a.len().max(b.len());
        let out = (0..len)
            .map(|i| {
                let x = *a.get(i).unwrap_or(&0);
                let y = *b.get(i).unwrap_or(&0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    /// Inverse of `a` modulo the irreducible `m`.
    pub(super) fn inverse_mod(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let (mut r0, mut r1) = (trim(m.to_vec()), trim(a.to_vec()));
        let (mut t0, mut t1) = (Vec::new(), vec![1u32]);
        while !r1.is_empty() {
            let (k, r) = divrem(&r0, &r1, p);
            let t = sub(&t0, &mul(&k, &t1, p), p);
            (r0, r1) = (r1, r);
            (t0, t1) = (t1, t);
        }
        // r0 is a nonzero constant since m is irreducible
        let c = inv_scalar(r0[0], p);
        t0.iter().map(|&x| (x as u64 * c as u64 % p as u64) as u32).collect()
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for k in 0..count {
                let mut g = vec![0u32; d + 1];
                let mut x = k;
                for slot in g.iter_mut().take(d) {
                    *slot = (x % p as u64) as u32;
                    x /= p as u64;
                }
                g[d] = 1;
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// The monic quadratic `x^2 - r x + s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quadratic {
    pub r: Elem,
    pub s: Elem,
}

impl Quadratic {
    /// Unchecked constructor; see [`FiniteField::quadratic`] for the checked one.
    pub fn new(r: Elem, s: Elem) -> Self {
        Quadratic { r, s }
    }

    pub fn eval(&self, field: &FiniteField, t: Elem) -> Elem {
        let t2 = field.square(t);
        field.add(field.sub(t2, field.mul(self.r, t)), self.s)
    }

    pub fn find_root(&self, field: &FiniteField) -> Option<Elem> {
        field.elements().find(|&t| self.eval(field, t).is_zero())
    }

    pub fn is_irreducible(&self, field: &FiniteField) -> bool {
        self.find_root(field).is_none()
    }

    /// Applies `x -> x^(p^i)` to both coefficients.
    pub fn frobenius(&self, field: &FiniteField, i: u32) -> Quadratic {
        Quadratic {
            r: field.frobenius(self.r, i),
            s: field.frobenius(self.s, i),
        }
    }

    /// Human-readable `x^2 + c1 x + c0` form with coefficients as element codes.
    pub fn describe(&self, field: &FiniteField) -> String {
        let c1 = field.neg(self.r);
        let mut out = String::from("x^2");
        match c1.code() {
            0 => {}
            1 => out.push_str("+x"),
            c => out.push_str(&format!("+{c}x")),
        }
        if !self.s.is_zero() {
            out.push_str(&format!("+{}", self.s));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_uses_modulus_t() {
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.modulus(), &[0, 1]);
        assert_eq!(f3.q(), 3);
    }

    #[test]
    fn f4_modulus_is_the_only_irreducible_quadratic() {
        // brute force: x^2 + a x + b over F_2 without a root in {0,1}
        let irreducible: Vec<(u32, u32)> = (0..2)
            .flat_map(|a| (0..2).map(move |b| (a, b)))
            .filter(|&(a, b)| (0..2).all(|t| (t * t + a * t + b) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![(1, 1)]);
        let f4 = FiniteField::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(FiniteField::new(3, 0), Err(Error::BadDegree(0)));
        assert!(matches!(FiniteField::new(2, 17), Err(Error::FieldTooLarge { .. })));
        assert!(FiniteField::new(2, 16).is_ok());
    }

    #[test]
    fn small_arithmetic() {
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.mul(Elem(2), Elem(2)), Elem(1));
        assert_eq!(f3.inv(Elem(2)), Ok(Elem(2)));
        assert_eq!(f3.inv(Elem(0)), Err(Error::DivisionByZero));

        let f4 = FiniteField::new(2, 2).unwrap();
        let w = f4.parse("t").unwrap();
        assert_eq!(w, Elem(2));
        assert_eq!(f4.mul(w, w), f4.parse("1+t").unwrap());
        assert_eq!(f4.frobenius(w, 1), Elem(3));
    }

    #[test]
    fn frobenius_on_f9() {
        let f9 = FiniteField::new(3, 2).unwrap();
        let g = f9
            .nonzero_elements()
            .find(|&g| f9.multiplicative_order(g) == Some(8))
            .expect("cyclic multiplicative group");
        assert_eq!(f9.frobenius(g, 1), f9.pow(g, 3));
        assert_eq!(f9.frobenius(Elem(2), 0), Elem(2));
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for (p, n) in [(2, 1), (2, 3), (2, 4), (3, 2), (5, 1), (7, 2), (2, 8)] {
            let f = FiniteField::new(p, n).unwrap();
            let q = f.q();
            assert!(f.nonzero_elements().any(|g| f.multiplicative_order(g) == Some(q - 1)));
        }
    }

    #[test]
    fn element_text_forms() {
        let f9 = FiniteField::new(3, 2).unwrap();
        for a in f9.elements() {
            assert_eq!(f9.parse(&f9.format_poly(a)).unwrap(), a);
        }
        assert_eq!(f9.parse("2*t+1").unwrap(), Elem(7));
        assert!(f9.parse("t^2").is_err());
        assert!(f9.parse("9").is_err());
        assert!(f9.parse("").is_err());
    }

    #[test]
    fn quadratic_enumeration() {
        let f2 = FiniteField::new(2, 1).unwrap();
        let quads = f2.irreducible_quadratics();
        assert_eq!(quads, vec![Quadratic::new(Elem(1), Elem(1))]);

        let f3 = FiniteField::new(3, 1).unwrap();
        let quads = f3.irreducible_quadratics();
        assert_eq!(quads.len(), 3);
        // x^2 + 2x + 2 = x^2 - 1x + 2
        assert!(quads.contains(&Quadratic::new(Elem(1), Elem(2))));
        assert_eq!(Quadratic::new(Elem(1), Elem(2)).describe(&f3), "x^2+2x+2");

        let f8 = FiniteField::new(2, 3).unwrap();
        assert_eq!(f8.irreducible_quadratics().len(), 28);
    }

    #[test]
    fn reducible_quadratic_reports_root() {
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(
            f3.quadratic(Elem(0), Elem(2)),
            Err(Error::Reducible { r: 0, s: 2, root: 1 })
        );
    }

    #[test]
    fn characteristic_two_quadratics_have_nonzero_r() {
        for n in 1..=4 {
            let f = FiniteField::new(2, n).unwrap();
            assert!(f.irreducible_quadratics().iter().all(|g| !g.r.is_zero()));
        }
    }

    #[test]
    fn irreducible_count_formula() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)] {
            let f = FiniteField::new(p, n).unwrap();
            let q = f.q() as usize;
            assert_eq!(f.irreducible_quadratics().len(), (q * q - q) / 2, "q = {q}");
        }
    }
}
