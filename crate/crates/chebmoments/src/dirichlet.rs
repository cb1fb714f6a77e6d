//! Dirichlet characters mod q: structure of (Z/q)^* by generators, discrete
//! logs, character evaluation, conductors, parity and Gauss sums.
//!
//! Characters are indexed by mixed-radix exponent tuples against the
//! generator decomposition; the same indexing is shared with the abelian
//! [`FiniteGroup`](crate::groups::FiniteGroup) built by [`DirichletGroup::group`],
//! so Artin data on the Galois group of Q(zeta_q) lines up character by
//! character with the classical Dirichlet data.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// The character group of (Z/q)^*.
#[derive(Debug, Clone)]
pub struct DirichletGroup {
    q: u64,
    /// generator residues with their orders (empty for q = 1, 2)
    gens: Vec<(u64, u64)>,
    /// discrete log tuple per residue class (None when gcd(n, q) > 1)
    dlog: Vec<Option<Vec<u64>>>,
    divisors: Vec<u64>,
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut bb = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % m as u128;
        }
        bb = bb * bb % m as u128;
        e >>= 1;
    }
    acc as u64
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Primitive root mod p^e for odd prime p.
fn primitive_root_pk(p: u64, e: u32) -> u64 {
    let g = crate::groups::table::primitive_root(p);
    if e == 1 {
        return g;
    }
    // g lifts to p^2 iff g^{p-1} != 1 mod p^2; otherwise g + p works.
    let p2 = p * p;
    if pow_mod(g, p - 1, p2) == 1 {
        g + p
    } else {
        g
    }
}

/// CRT: x ≡ a mod m, x ≡ b mod n for coprime m, n.
fn crt(a: u64, m: u64, b: u64, n: u64) -> u64 {
    // x = a + m * t with t ≡ (b - a) * m^{-1} mod n
    let minv = crate::groups::mod_inverse(m % n, n);
    let diff = ((b as i128 - a as i128).rem_euclid(n as i128)) as u64;
    a + m * (diff * minv % n)
}

impl DirichletGroup {
    pub fn new(q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::Parse("modulus 0".into()));
        }
        let mut gens: Vec<(u64, u64)> = Vec::new();
        for (p, e) in factorize(q) {
            let pe = p.pow(e);
            let rest = q / pe;
            // lift r mod pe (or a pair of them for 2^e) to mod q, ≡ 1 elsewhere
            let lift = |r: u64| -> u64 {
                if rest == 1 {
                    r % q
                } else {
                    crt(r % pe, pe, 1, rest) % q.max(1)
                }
            };
            if p == 2 {
                match e {
                    1 => {}
                    2 => gens.push((lift(3), 2)),
                    _ => {
                        gens.push((lift(pe - 1), 2));
                        gens.push((lift(5), 1 << (e - 2)));
                    }
                }
            } else {
                let g = primitive_root_pk(p, e);
                let order = pe / p * (p - 1);
                gens.push((lift(g), order));
            }
        }
        // discrete log table by enumerating generator-power products
        let mut dlog: Vec<Option<Vec<u64>>> = vec![None; q as usize];
        let orders: Vec<u64> = gens.iter().map(|&(_, d)| d).collect();
        let mut tuple = vec![0u64; gens.len()];
        loop {
            let mut x = 1u64;
            for (&(g, _), &t) in gens.iter().zip(&tuple) {
                x = x * pow_mod(g, t, q.max(2)) % q.max(2);
            }
            let slot = (x % q.max(1)) as usize;
            if q == 1 {
                dlog[0] = Some(tuple.clone());
            } else {
                debug_assert!(dlog[slot].is_none(), "generators not independent");
                dlog[slot] = Some(tuple.clone());
            }
            // mixed-radix increment
            let mut i = tuple.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                tuple[i] += 1;
                if tuple[i] < orders[i] {
                    break;
                }
                tuple[i] = 0;
            }
            if tuple.iter().all(|&t| t == 0) {
                break;
            }
        }
        let mut divisors: Vec<u64> = (1..=q).filter(|d| q % d == 0).collect();
        divisors.sort_unstable();
        Ok(Self { q, gens, dlog, divisors })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn phi(&self) -> u64 {
        self.gens.iter().map(|&(_, d)| d).product()
    }

    /// Factor orders of the generator decomposition (empty for q = 1, 2).
    pub fn factor_orders(&self) -> Vec<u64> {
        self.gens.iter().map(|&(_, d)| d).collect()
    }

    /// The Galois group Gal(Q(zeta_q)/Q) ≅ (Z/q)^* as an abelian
    /// [`FiniteGroup`], classes indexed exactly like this character group.
    pub fn group(&self) -> Result<Arc<FiniteGroup>> {
        let f = self.factor_orders();
        if f.is_empty() {
            FiniteGroup::cyclic(1)
        } else {
            FiniteGroup::abelian(f)
        }
    }

    /// Mixed-radix index of the class of a residue (None when not coprime).
    pub fn class_of_residue(&self, n: u64) -> Option<usize> {
        let r = (n % self.q.max(1)) as usize;
        let tuple = self.dlog.get(r).and_then(|t| t.as_ref())?;
        let orders = self.factor_orders();
        let mut idx = 0u64;
        for (&t, &d) in tuple.iter().zip(&orders) {
            idx = idx * d + t;
        }
        Some(idx as usize)
    }

    /// Exponent tuple of a character index in the mixed-radix indexing.
    pub fn char_tuple(&self, chi: usize) -> Vec<u64> {
        let orders = self.factor_orders();
        let mut idx = chi as u64;
        let mut tuple = vec![0u64; orders.len()];
        for i in (0..orders.len()).rev() {
            tuple[i] = idx % orders[i];
            idx /= orders[i];
        }
        tuple
    }

    /// chi(n); zero when gcd(n, q) > 1.
    pub fn eval(&self, chi: usize, n: u64) -> Complex64 {
        match self.char_phase(chi, n) {
            None => Complex64::default(),
            Some(phase) => {
                let th = 2.0 * std::f64::consts::PI * phase;
                Complex64::new(th.cos(), th.sin())
            }
        }
    }

    /// Phase in [0,1) of chi(n) as an exact rational evaluated in f64.
    fn char_phase(&self, chi: usize, n: u64) -> Option<f64> {
        if self.q == 1 {
            return Some(0.0);
        }
        if gcd(n % self.q, self.q) != 1 {
            return None;
        }
        let tuple = self.dlog[(n % self.q) as usize].as_ref()?;
        let k = self.char_tuple(chi);
        let orders = self.factor_orders();
        let mut phase = 0.0;
        for ((&ki, &ti), &d) in k.iter().zip(tuple).zip(&orders) {
            phase += (ki * ti % d) as f64 / d as f64;
        }
        Some(phase.fract())
    }

    pub fn is_trivial(&self, chi: usize) -> bool {
        self.char_tuple(chi).iter().all(|&k| k == 0)
    }

    /// chi(-1) = ±1; true for even characters.
    pub fn is_even(&self, chi: usize) -> bool {
        if self.q <= 2 {
            return true;
        }
        (self.eval(chi, self.q - 1).re - 1.0).abs() < 1e-9
    }

    /// Index of the character with conjugate values.
    pub fn conjugate(&self, chi: usize) -> usize {
        let orders = self.factor_orders();
        let k = self.char_tuple(chi);
        let mut idx = 0u64;
        for (&ki, &d) in k.iter().zip(&orders) {
            idx = idx * d + (d - ki % d) % d;
        }
        idx as usize
    }

    /// Conductor: smallest f | q with chi trivial on the kernel of
    /// (Z/q)^* -> (Z/f)^*.
    pub fn conductor(&self, chi: usize) -> u64 {
        'div: for &f in &self.divisors {
            for n in 1..=self.q {
                if n % f == 1 % f && gcd(n, self.q) == 1 {
                    let v = self.eval(chi, n);
                    if (v - 1.0).norm() > 1e-9 {
                        continue 'div;
                    }
                }
            }
            return f;
        }
        self.q
    }

    /// Value at m of the primitive character mod `f` inducing chi
    /// (f = conductor(chi)); zero when gcd(m, f) > 1.
    pub fn primitive_eval(&self, chi: usize, f: u64, m: u64) -> Complex64 {
        if f == 1 {
            return Complex64::new(1.0, 0.0);
        }
        let m = m % f;
        if gcd(m, f) != 1 {
            return Complex64::default();
        }
        // lift m mod f to a residue coprime to q
        let mut n = m;
        while gcd(n % self.q.max(1), self.q) != 1 {
            n += f;
        }
        self.eval(chi, n)
    }

    /// Gauss sum of the primitive character inducing chi, mod its conductor.
    pub fn gauss_sum(&self, chi: usize) -> Complex64 {
        let f = self.conductor(chi);
        let mut tau = Complex64::default();
        for a in 1..=f {
            let th = 2.0 * std::f64::consts::PI * (a as f64) / (f as f64);
            tau += self.primitive_eval(chi, f, a) * Complex64::new(th.cos(), th.sin());
        }
        tau
    }
}
