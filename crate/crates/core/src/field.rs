//! Exact arithmetic in GF(q) for prime powers q, plus prime-power utilities.
//!
//! Elements are packed integers in `[0, q)`: the element with coefficient
//! vector `(c_0, ..., c_{e-1})` over GF(p), in the basis `(1, X, ..., X^{e-1})`,
//! is stored as `sum c_i * p^i`. Extension fields of order up to 2^16 carry
//! log/antilog tables so that multiplication and inversion are table lookups;
//! larger fields reduce polynomials directly. Weight enumeration is
//! multiplication-heavy, which is what the tables are for.
//!
//! A [`FieldSpec`] is immutable after construction and cheap to clone (the
//! tables sit behind an `Arc`), so it can be shared freely across threads.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order. Everything in this crate runs at desk
/// scale; fields beyond 2^20 are out of scope.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Fields up to this order get log/antilog tables.
const TABLE_LIMIT: u64 = 1 << 16;

/// Arithmetic carrier for GF(q), q = p^e.
///
/// ```
/// use wspectra::field::FieldSpec;
///
/// let f = FieldSpec::new(9).unwrap();
/// let w = f.primitive_element();
/// assert_eq!(f.pow(w, 8), 1);
/// assert_eq!(f.mul(w, f.inv(w).unwrap()), 1);
/// assert!(FieldSpec::new(6).is_err());
/// ```
#[derive(Clone)]
pub struct FieldSpec {
    p: u64,
    degree: u32,
    q: u64,
    /// Monic modulus polynomial, coefficients low-to-high, length `degree + 1`.
    /// For prime fields this is the stand-in `X`.
    modulus: Vec<u64>,
    /// Smallest packed element of multiplicative order q - 1 (1 for q = 2).
    primitive: u64,
    tables: Option<Arc<Tables>>,
}

struct Tables {
    /// exp[i] = g^i for i in [0, q-1)
    exp: Vec<u64>,
    /// log[x] = i with g^i = x, for x in [1, q)
    log: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds GF(q). The modulus is the first irreducible polynomial in the
    /// packed enumeration order, so the representation is reproducible.
    pub fn new(q: u64) -> Result<Self> {
        if q > MAX_FIELD_ORDER {
            return Err(Error::OutOfRange(format!(
                "field order {q} exceeds the supported maximum {MAX_FIELD_ORDER}"
            )));
        }
        let (p, degree) = prime_power_split(q).ok_or(Error::NotAPrimePower(q))?;
        let modulus = if degree == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, degree)
        };
        let mut spec = FieldSpec {
            p,
            degree,
            q,
            modulus,
            primitive: 1,
            tables: None,
        };
        spec.primitive = spec.find_primitive();
        if degree >= 2 && q <= TABLE_LIMIT {
            spec.tables = Some(Arc::new(spec.build_tables()));
        }
        Ok(spec)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus polynomial coefficients, low to high.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// All packed elements, zero first.
    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.q
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.q
    }

    /// Coefficient vector of a packed element, length `degree`.
    pub fn coeffs(&self, a: u64) -> Vec<u64> {
        debug_assert!(a < self.q);
        let mut a = a;
        let mut out = Vec::with_capacity(self.degree as usize);
        for _ in 0..self.degree {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    /// Packs a coefficient vector; entries must be reduced mod p and the
    /// length must equal the field degree.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<u64> {
        if coeffs.len() != self.degree as usize {
            return Err(Error::DimensionMismatch {
                expected: self.degree as usize,
                got: coeffs.len(),
            });
        }
        let mut a = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::OutOfRange(format!(
                    "coefficient {c} not reduced mod {}",
                    self.p
                )));
            }
            a = a * self.p + c;
        }
        Ok(a)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.p == 2 {
            return a ^ b;
        }
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.p == 2 {
            return a ^ b;
        }
        if self.degree == 1 {
            return (a + self.p - b) % self.p;
        }
        self.digitwise(a, b, |x, y| (x + self.p - y) % self.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if a == 0 || b == 0 {
            return 0;
        }
        if self.degree == 1 {
            return (a * b) % self.p;
        }
        if let Some(t) = &self.tables {
            let i = t.log[a as usize] as u64 + t.log[b as usize] as u64;
            return t.exp[(i % (self.q - 1)) as usize];
        }
        self.mul_poly(a, b)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        debug_assert!(a < self.q);
        if let Some(t) = &self.tables {
            let i = (self.q - 1 - t.log[a as usize] as u64) % (self.q - 1);
            return Ok(t.exp[i as usize]);
        }
        // a^(q-2) works for prime fields and large extensions alike.
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u64, mut n: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// A fixed generator of the multiplicative group: the smallest packed
    /// element of order q - 1. For q = 2 this is 1.
    pub fn primitive_element(&self) -> u64 {
        self.primitive
    }

    /// Dot product of two equal-length vectors of packed elements.
    pub fn dot(&self, u: &[u64], v: &[u64]) -> u64 {
        debug_assert_eq!(u.len(), v.len());
        if self.degree == 1 {
            // Products are < p^2 <= 2^40; sums of desk-scale length fit u64.
            let mut acc = 0u64;
            for (&a, &b) in u.iter().zip(v) {
                acc += a * b;
            }
            return acc % self.p;
        }
        let mut acc = 0u64;
        for (&a, &b) in u.iter().zip(v) {
            acc = self.add(acc, self.mul(a, b));
        }
        acc
    }

    fn digitwise(&self, a: u64, b: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut shift = 1u64;
        for _ in 0..self.degree {
            out += f(a % self.p, b % self.p) * shift;
            a /= self.p;
            b /= self.p;
            shift *= self.p;
        }
        out
    }

    /// Polynomial-basis multiplication, used to seed the tables and as the
    /// path for fields above the table limit.
    fn mul_poly(&self, a: u64, b: u64) -> u64 {
        let pa = self.coeffs(a);
        let pb = self.coeffs(b);
        let e = self.degree as usize;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &ca) in pa.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in pb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ca * cb) % self.p;
            }
        }
        // Reduce by the monic modulus.
        for i in (e..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate().take(e) {
                let idx = i - e + j;
                prod[idx] = (prod[idx] + c * (self.p - m) % self.p) % self.p;
            }
        }
        let mut out = 0u64;
        for &c in prod[..e].iter().rev() {
            out = out * self.p + c;
        }
        out
    }

    fn pow_poly(&self, a: u64, mut n: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = if self.degree == 1 {
                    acc * base % self.p
                } else {
                    self.mul_poly(acc, base)
                };
            }
            base = if self.degree == 1 {
                base * base % self.p
            } else {
                self.mul_poly(base, base)
            };
            n >>= 1;
        }
        acc
    }

    fn find_primitive(&self) -> u64 {
        if self.q == 2 {
            return 1;
        }
        let factors = prime_factors(self.q - 1);
        'candidate: for g in 2..self.q {
            for &r in &factors {
                if self.pow_poly(g, (self.q - 1) / r) == 1 {
                    continue 'candidate;
                }
            }
            return g;
        }
        unreachable!("every finite field has a primitive element")
    }

    fn build_tables(&self) -> Tables {
        let order = (self.q - 1) as usize;
        let mut exp = vec![0u64; order];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u64;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = x;
            log[x as usize] = i as u32;
            x = self.mul_poly(x, self.primitive);
        }
        debug_assert_eq!(x, 1, "generator order must be q - 1");
        Tables { exp, log }
    }
}

/// Splits q into (p, e) with q = p^e and p prime, by trial division.
pub fn prime_power_split(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_factor(q);
    let mut rest = q;
    let mut e = 0u32;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn is_prime_power(m: u64) -> bool {
    prime_power_split(m).is_some()
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && smallest_factor(m) == m
}

/// Smallest prime power >= max(t, 2). By convention 1 is not a prime power,
/// so the result for t <= 2 is 2.
pub fn next_prime_power(t: u64) -> u64 {
    if t <= 2 {
        return 2;
    }
    // Even prime powers are exactly the powers of two, so it is enough to
    // scan odd candidates below the next power of two.
    let two_power = t.next_power_of_two();
    let mut m = t | 1;
    while m < two_power {
        if is_prime_power_odd(m) {
            return m;
        }
        m += 2;
    }
    two_power
}

fn is_prime_power_odd(m: u64) -> bool {
    debug_assert!(m % 2 == 1 && m > 2);
    let p = smallest_odd_factor(m);
    if p == m {
        return true;
    }
    let mut rest = m;
    while rest % p == 0 {
        rest /= p;
    }
    rest == 1
}

fn smallest_factor(m: u64) -> u64 {
    if m % 2 == 0 {
        return 2;
    }
    smallest_odd_factor(m)
}

fn smallest_odd_factor(m: u64) -> u64 {
    if m % 3 == 0 {
        return 3;
    }
    let mut d = 5u64;
    while d * d <= m {
        if m % d == 0 {
            return d;
        }
        if m % (d + 2) == 0 {
            return d + 2;
        }
        d += 6;
    }
    m
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// First monic irreducible polynomial of the given degree over GF(p), in
/// packed enumeration order of the non-leading coefficients.
fn smallest_irreducible(p: u64, degree: u32) -> Vec<u64> {
    let e = degree as usize;
    let count = p.pow(degree);
    for packed in 0..count {
        let mut f = Vec::with_capacity(e + 1);
        let mut rest = packed;
        for _ in 0..e {
            f.push(rest % p);
            rest /= p;
        }
        f.push(1);
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Rabin's test: f of degree e is irreducible over GF(p) iff
/// X^(p^e) = X (mod f) and gcd(X^(p^(e/r)) - X, f) = 1 for every prime r | e.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let e = (f.len() - 1) as u32;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    let x = vec![0, 1];
    let frob_full = polymod_pow(&x, p.pow(e), f, p);
    if polymod_sub(&frob_full, &x, p).iter().any(|&c| c != 0) {
        return false;
    }
    for r in prime_factors(e as u64) {
        let frob = polymod_pow(&x, p.pow(e / r as u32), f, p);
        let diff = polymod_sub(&frob, &x, p);
        if poly_gcd(&diff, f, p).len() > 1 {
            return false;
        }
    }
    true
}

fn poly_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn polymod_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    poly_trim(out)
}

fn polymod_mul(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ca * cb) % p;
        }
    }
    poly_rem(prod, f, p)
}

fn poly_rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let e = f.len() - 1;
    while a.len() > e {
        let c = *a.last().unwrap();
        let deg = a.len() - 1;
        if c != 0 {
            // f is monic.
            for (j, &m) in f.iter().enumerate().take(e) {
                let idx = deg - e + j;
                a[idx] = (a[idx] + c * (p - m) % p) % p;
            }
        }
        a.pop();
    }
    poly_trim(a)
}

fn polymod_pow(a: &[u64], mut n: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut base = poly_rem(a.to_vec(), f, p);
    let mut acc = vec![1u64];
    while n > 0 {
        if n & 1 == 1 {
            acc = polymod_mul(&acc, &base, f, p);
        }
        base = polymod_mul(&base, &base, f, p);
        n >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while b != [0] {
        // Remainder of a by b after making b monic.
        let lead_inv = mod_inv(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|&c| c * lead_inv % p).collect();
        let r = if a.len() >= monic.len() {
            poly_rem_general(&a, &monic, p)
        } else {
            a.clone()
        };
        a = b;
        b = r;
    }
    a
}

fn poly_rem_general(a: &[u64], monic: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let e = monic.len() - 1;
    while a.len() > e && a != [0] {
        let c = *a.last().unwrap();
        let deg = a.len() - 1;
        if c != 0 {
            for (j, &m) in monic.iter().enumerate().take(e) {
                let idx = deg - e + j;
                a[idx] = (a[idx] + c * (p - m) % p) % p;
            }
        }
        a.pop();
        a = poly_trim(a);
    }
    poly_trim(a)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime and a != 0.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut n = p - 2;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        n >>= 1;
    }
    acc
}
