//! Arithmetic in GF(p^e).
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! polynomial coefficients (digit `i` is the coefficient of `x^i`). For
//! `e >= 2` the modulus is the first monic irreducible polynomial of degree
//! `e` when candidates are enumerated by that same encoding of their lower
//! coefficients; multiplication runs through exp/log tables of a primitive
//! element.

use crate::error::{Error, Result};

/// Element of a [`FiniteField`], encoded as described in the module docs.
pub type Element = u32;

/// Largest field order accepted; the tables are linear in `q`.
pub const MAX_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    /// Modulus coefficients, lowest degree first; monic of degree `e`.
    modulus: Vec<u32>,
    exp: Vec<Element>,
    log: Vec<u32>,
}

/// Returns `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..)
        .take_while(|d| d * d <= q)
        .find(|d| q.is_multiple_of(*d))
        .unwrap_or(q);
    let (mut rest, mut e) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::ParameterOutOfRange(format!("field order {q} < 2")));
        }
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::ParameterOutOfRange(format!(
                "field order {q} exceeds {MAX_ORDER}"
            )));
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, e)
        };
        let mut field = FiniteField {
            p,
            e,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        0..self.q
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn neg(&self, a: Element) -> Element {
        if self.p == 2 {
            return a;
        }
        self.digitwise(a, 0, |x, _| (self.p - x) % self.p)
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        if a == 0 || b == 0 {
            return 0;
        }
        let l = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[l as usize]
    }

    pub fn inv(&self, a: Element) -> Option<Element> {
        (a != 0).then(|| {
            let l = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
            self.exp[l as usize]
        })
    }

    /// `a / b`; panics when `b = 0`.
    pub fn div(&self, a: Element, b: Element) -> Element {
        self.mul(a, self.inv(b).expect("division by zero"))
    }

    fn digitwise(&self, mut a: u32, mut b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.e {
            out += f(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn to_poly(&self, mut a: u32) -> Vec<u32> {
        (0..self.e)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn encode_poly(&self, poly: &[u32]) -> u32 {
        poly.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Schoolbook product reduced by the modulus; used to seed the tables.
    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let prod = poly_mul(&self.to_poly(a), &self.to_poly(b), self.p);
        let rem = poly_rem(&prod, &self.modulus, self.p);
        let mut digits = rem;
        digits.resize(self.e as usize, 0);
        self.encode_poly(&digits)
    }

    fn build_tables(&mut self) {
        let order = self.q - 1;
        let generator = (1..self.q)
            .find(|&g| {
                let mut x = g;
                for k in 1..order {
                    if x == 1 {
                        return k == order;
                    }
                    x = self.slow_mul(x, g);
                }
                x == 1
            })
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0; self.q as usize];
        let mut x = 1;
        for k in 0..order {
            exp.push(x);
            log[x as usize] = k;
            x = self.slow_mul(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }
}

fn trim(mut p: Vec<u32>) -> Vec<u32> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
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

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) inverts a.
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo the nonzero polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let m = trim(m.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = mod_inverse(*m.last().expect("nonzero modulus"), p) as u64;
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let factor = *r.last().unwrap() as u64 * lead_inv % p as u64;
        for (i, &c) in m.iter().enumerate() {
            let sub = factor * c as u64 % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `index`.
fn monic(index: u64, deg: u32, p: u32) -> Vec<u32> {
    let mut coeffs = Vec::with_capacity(deg as usize + 1);
    let mut rest = index;
    for _ in 0..deg {
        coeffs.push((rest % p as u64) as u32);
        rest /= p as u64;
    }
    coeffs.push(1);
    coeffs
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() as u32 - 1;
    (1..=deg / 2).all(|d| {
        (0..(p as u64).pow(d)).all(|idx| !poly_rem(f, &monic(idx, d, p), p).is_empty())
    })
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    (0..(p as u64).pow(e))
        .map(|idx| monic(idx, e, p))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
