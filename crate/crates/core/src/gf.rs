//! Arithmetic in the finite field GF(q), q = p^n.
//!
//! Elements are stored by their canonical integer encoding: the base-p value
//! of the little-endian coefficient vector of the residue polynomial. For a
//! prime field the encoding is the residue itself. Zero encodes as 0 and one
//! as 1 in every field.
//!
//! Construction is deterministic. The modulus is the monic irreducible
//! polynomial of degree n whose coefficient vector has the smallest encoding,
//! and the primitive element is the generator of the multiplicative group
//! with the smallest encoding. Multiplication afterwards goes through
//! exponent/logarithm tables built from that generator.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// An element of a finite field, identified by its canonical encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw encoding. Validity against a particular field is checked
    /// by [`FieldTable::element`].
    pub const fn new(enc: u32) -> Self {
        FieldElement(enc)
    }

    pub const fn enc(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Characteristic, degree and modulus of a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub n: u32,
    pub q: u32,
    /// Little-endian, monic, length `n + 1`. For prime fields this is the
    /// polynomial `x`, which is what the canonical rule selects for degree 1.
    pub modulus: Vec<u32>,
}

/// A concrete field GF(q) with its primitive element and log tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    spec: FieldSpec,
    xi: FieldElement,
    exp: Vec<FieldElement>,
    log: Vec<u32>,
}

const NO_LOG: u32 = u32::MAX;

/// Splits `q` as `p^n` with `p` prime, or returns `None`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p as u32, n))
}

fn smallest_prime_factor(m: u64) -> u64 {
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    m
}

fn distinct_prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Builds GF(q).
pub fn make_field(q: u64) -> Result<FieldTable> {
    let (p, n) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
    if q > MAX_ORDER {
        return Err(Error::FieldTooLarge(q));
    }
    let modulus = smallest_irreducible(p, n);
    let spec = FieldSpec {
        p,
        n,
        q: q as u32,
        modulus,
    };
    let arith = PolyArith { spec: &spec };

    let group_order = q - 1;
    let factors = distinct_prime_factors(group_order);
    let xi = (1..q as u32)
        .find(|&a| factors.iter().all(|&r| arith.pow(a, group_order / r) != 1))
        .expect("the multiplicative group is cyclic");

    let mut exp = Vec::with_capacity(group_order as usize);
    let mut log = vec![NO_LOG; q as usize];
    let mut cur = 1u32;
    for j in 0..group_order as u32 {
        exp.push(FieldElement(cur));
        log[cur as usize] = j;
        cur = arith.mul(cur, xi);
    }
    debug_assert_eq!(cur, 1);

    Ok(FieldTable {
        spec,
        xi: FieldElement(xi),
        exp,
        log,
    })
}

/// Monic irreducible of degree `n` over Z_p with the smallest encoding.
fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    let pn = (p as u64).pow(n);
    for low in 0..pn {
        let mut poly = digits(low, p, n as usize);
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let n = poly.len() - 1;
    for deg in 1..=n / 2 {
        let count = (p as u64).pow(deg as u32);
        for low in 0..count {
            let mut divisor = digits(low, p, deg);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits(mut value: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push((value % p as u64) as u32);
        value /= p as u64;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` by the monic polynomial `m`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    let p64 = p as u64;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = lead * c as u64 % p64;
                let slot = &mut r[shift + i];
                *slot = ((*slot as u64 + p64 - sub) % p64) as u32;
            }
        }
        r.pop();
    }
    r
}

/// Schoolbook polynomial arithmetic used only while building tables.
struct PolyArith<'a> {
    spec: &'a FieldSpec,
}

impl PolyArith<'_> {
    fn mul(&self, a: u32, b: u32) -> u32 {
        let FieldSpec { p, n, .. } = *self.spec;
        let n = n as usize;
        let da = digits(a as u64, p, n);
        let db = digits(b as u64, p, n);
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let mut rem = poly_rem(&prod, &self.spec.modulus, p);
        rem.resize(n, 0);
        undigits(&rem, p)
    }

    fn pow(&self, base: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
}

impl FieldTable {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> u32 {
        self.spec.q
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    /// The primitive element.
    pub fn xi(&self) -> FieldElement {
        self.xi
    }

    /// `exp_table[j] = xi^j` for `j` in `0..q-1`.
    pub fn exp_table(&self) -> &[FieldElement] {
        &self.exp
    }

    /// Checked conversion from an encoding.
    pub fn element(&self, enc: u32) -> Option<FieldElement> {
        (enc < self.spec.q).then_some(FieldElement(enc))
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.spec.q).map(FieldElement)
    }

    /// Nonzero elements in exponent order `xi^0, xi^1, ..., xi^(q-2)`.
    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.exp.iter().copied()
    }

    /// Discrete logarithm base `xi`; `None` for zero or an encoding outside
    /// the field.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        match self.log.get(a.0 as usize) {
            None | Some(&NO_LOG) => None,
            Some(&j) => Some(j),
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let FieldSpec { p, n, .. } = self.spec;
        if n == 1 {
            return FieldElement((a.0 + b.0) % p);
        }
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0, 1);
        for _ in 0..n {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let FieldSpec { p, n, .. } = self.spec;
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let (mut out, mut place) = (0, 1);
        for _ in 0..n {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let m = self.spec.q - 1;
        let e = (self.log[a.0 as usize] + self.log[b.0 as usize]) % m;
        self.exp[e as usize]
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let j = self.log(a).ok_or(Error::DivisionByZero)?;
        let m = self.spec.q - 1;
        Ok(self.exp[((m - j) % m) as usize])
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `xi^j`, with `j` reduced modulo `q - 1`.
    pub fn power_of_xi(&self, j: i64) -> FieldElement {
        let m = (self.spec.q - 1) as i64;
        self.exp[j.rem_euclid(m) as usize]
    }
}
