use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::arith::{euler_phi, factor, modulo};
use crate::error::{Error, Result};
use crate::qseries::{gauss, int, ComplexF, GaussRational, Rational};

/// Largest modulus accepted by [`enumerate_characters`].
pub const MODULUS_CAP: u64 = 240;

/// A Dirichlet character modulo `N`.
///
/// Values are stored as exponents: `χ(a) = e^{2πi·k/order}` or `None` when
/// `gcd(a, N) > 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DirichletCharacter {
    modulus: u64,
    order: u64,
    exps: Vec<Option<u64>>,
}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_principal() {
            return write!(f, "1_{}", self.modulus);
        }
        write!(f, "chi[{}; ", self.modulus)?;
        let vals: Vec<String> = (1..self.modulus)
            .filter(|&a| a.gcd(&self.modulus) == 1)
            .take(4)
            .map(|a| format!("{}->{}/{}", a, self.exps[a as usize].unwrap(), self.order))
            .collect();
        write!(f, "{}]", vals.join(","))
    }
}

/// Cyclic components of `(Z/NZ)^×` with discrete-log tables on the
/// component modulus.
struct Component {
    modulus: u64,
    order: u64,
    log: Vec<Option<u64>>,
}

fn components(n: u64) -> Vec<Component> {
    let mut comps = Vec::new();
    for (p, e) in factor(n) {
        let q = p.pow(e);
        let gens: Vec<(u64, u64)> = if p == 2 {
            match e {
                1 => vec![],
                2 => vec![(3, 2)],
                _ => vec![(q - 1, 2), (5, q / 4)],
            }
        } else {
            let phi = q / p * (p - 1);
            let g = (2..q)
                .find(|&g| g % p != 0 && mult_order(g, q) == phi)
                .expect("primitive root");
            vec![(g, phi)]
        };
        if p == 2 && e >= 3 {
            let (g1, o1) = gens[0];
            let (g2, o2) = gens[1];
            let mut log1 = vec![None; q as usize];
            let mut log2 = vec![None; q as usize];
            let mut a = 1u64;
            for i in 0..o1 {
                let mut b = a;
                for j in 0..o2 {
                    log1[b as usize] = Some(i);
                    log2[b as usize] = Some(j);
                    b = b * g2 % q;
                }
                a = a * g1 % q;
            }
            comps.push(Component {
                modulus: q,
                order: o1,
                log: log1,
            });
            comps.push(Component {
                modulus: q,
                order: o2,
                log: log2,
            });
        } else {
            for (g, o) in gens {
                let mut log = vec![None; q as usize];
                let mut a = 1u64;
                for i in 0..o {
                    log[a as usize] = Some(i);
                    a = a * g % q;
                }
                comps.push(Component {
                    modulus: q,
                    order: o,
                    log,
                });
            }
        }
    }
    comps
}

fn mult_order(g: u64, q: u64) -> u64 {
    let mut a = g % q;
    let mut k = 1;
    while a != 1 {
        a = a * g % q;
        k += 1;
    }
    k
}

impl DirichletCharacter {
    fn from_fractions(modulus: u64, fr: Vec<Option<(u64, u64)>>) -> Self {
        let order = fr.iter().flatten().fold(1u64, |acc, &(_, d)| acc.lcm(&d));
        let exps = fr
            .into_iter()
            .map(|v| v.map(|(k, d)| (k * (order / d)) % order))
            .collect();
        let mut c = DirichletCharacter {
            modulus,
            order,
            exps,
        };
        c.reduce_order();
        c
    }

    fn reduce_order(&mut self) {
        let g = self
            .exps
            .iter()
            .flatten()
            .fold(self.order, |acc, &k| acc.gcd(&k));
        if g > 1 {
            self.order /= g;
            for e in self.exps.iter_mut().flatten() {
                *e /= g;
            }
        }
    }

    /// The principal character `1_N`.
    pub fn principal(modulus: u64) -> Self {
        let exps = (0..modulus)
            .map(|a| if a.gcd(&modulus) == 1 { Some(0) } else { None })
            .collect();
        let mut c = DirichletCharacter {
            modulus,
            order: 1,
            exps,
        };
        if modulus == 1 {
            c.exps = vec![Some(0)];
        }
        c
    }

    /// Builds the character from arbitrary values given as exponent fractions
    /// `k/m` of `e^{2πik/m}` on every unit residue.
    pub fn from_values(modulus: u64, f: impl Fn(u64) -> Option<(u64, u64)>) -> Self {
        let fr = (0..modulus.max(1))
            .map(|a| {
                if a.gcd(&modulus) == 1 || modulus == 1 {
                    f(a)
                } else {
                    None
                }
            })
            .collect();
        Self::from_fractions(modulus, fr)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// Exponent `k` of `χ(a) = e^{2πik/order}`.
    pub fn exponent(&self, a: i64) -> Option<u64> {
        self.exps[modulo(a, self.modulus) as usize]
    }

    /// Numeric value.
    pub fn value(&self, a: i64) -> ComplexF {
        match self.exponent(a) {
            None => ComplexF::zero(),
            Some(k) if self.is_gaussian() => exact_unit(k, self.order).to_complex_f(),
            Some(k) => ComplexF::from_polar(1.0, 2.0 * PI * k as f64 / self.order as f64),
        }
    }

    /// True if every value lies in `Q(i)`.
    pub fn is_gaussian(&self) -> bool {
        4 % self.order == 0
    }

    /// Exact value in `Q(i)` when the order divides 4.
    pub fn value_exact(&self, a: i64) -> Option<GaussRational> {
        if !self.is_gaussian() {
            return None;
        }
        Some(match self.exponent(a) {
            None => gauss(int(0), int(0)),
            Some(k) => exact_unit(k, self.order).to_gauss(),
        })
    }

    /// `χ(−1) = ±1`.
    pub fn parity(&self) -> i64 {
        match self.exponent(-1) {
            Some(0) => 1,
            _ => -1,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == -1
    }

    pub fn conj(&self) -> Self {
        let exps = self
            .exps
            .iter()
            .map(|e| e.map(|k| (self.order - k) % self.order))
            .collect();
        DirichletCharacter {
            modulus: self.modulus,
            order: self.order,
            exps,
        }
    }

    /// Product character on the lcm of the moduli.
    pub fn mul(&self, other: &Self) -> Self {
        let m = self.modulus.lcm(&other.modulus);
        Self::from_values(m, |a| {
            let x = self.exponent(a as i64)?;
            let y = other.exponent(a as i64)?;
            let o = self.order.lcm(&other.order);
            Some(((x * (o / self.order) + y * (o / other.order)) % o, o))
        })
    }

    /// The character viewed modulo a multiple `m` of its modulus.
    pub fn lift(&self, m: u64) -> Self {
        assert!(
            m % self.modulus == 0,
            "lift target must be a multiple of the modulus"
        );
        self.mul(&Self::principal(m))
    }

    /// Smallest `f | N` such that `χ` factors through `(Z/fZ)^×`.
    pub fn conductor(&self) -> u64 {
        let n = self.modulus;
        for f in 1..=n {
            if n % f != 0 {
                continue;
            }
            let ok = (0..n).all(|a| match self.exps[a as usize] {
                Some(k) => a % f != 1 % f || k == 0,
                None => true,
            });
            if ok {
                return f;
            }
        }
        n
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }

    /// The primitive character inducing this one.
    pub fn primitive(&self) -> Self {
        let f = self.conductor();
        if f == self.modulus {
            return self.clone();
        }
        let n = self.modulus;
        let order = self.order;
        Self::from_values(f, |a| {
            let lifted = (0..n / f.max(1) + 1)
                .map(|t| a + t * f)
                .find(|&b| b.gcd(&n) == 1)
                .expect("unit lift");
            self.exponent(lifted as i64).map(|k| (k, order))
        })
    }
}

/// `e^{2πik/m}` for `m | 4`.
#[derive(Clone, Copy)]
struct Unit4(u8);

fn exact_unit(k: u64, m: u64) -> Unit4 {
    Unit4(((k * (4 / m)) % 4) as u8)
}

impl Unit4 {
    fn to_gauss(self) -> GaussRational {
        match self.0 {
            0 => gauss(int(1), int(0)),
            1 => gauss(int(0), int(1)),
            2 => gauss(int(-1), int(0)),
            _ => gauss(int(0), int(-1)),
        }
    }
    fn to_complex_f(self) -> ComplexF {
        match self.0 {
            0 => ComplexF::new(1.0, 0.0),
            1 => ComplexF::new(0.0, 1.0),
            2 => ComplexF::new(-1.0, 0.0),
            _ => ComplexF::new(0.0, -1.0),
        }
    }
}

/// All `φ(m)` characters modulo `m`, in a fixed deterministic order.
pub fn enumerate_characters(m: u64) -> Result<Vec<DirichletCharacter>> {
    if m == 0 {
        return Err(Error::Precondition("modulus must be positive".into()));
    }
    if m > MODULUS_CAP {
        return Err(Error::ModulusCap {
            modulus: m,
            cap: MODULUS_CAP,
        });
    }
    if m == 1 {
        return Ok(vec![DirichletCharacter::principal(1)]);
    }
    let comps = components(m);
    let mut out = Vec::new();
    let total: u64 = comps.iter().map(|c| c.order).product();
    for idx in 0..total {
        let mut js = Vec::with_capacity(comps.len());
        let mut r = idx;
        for c in &comps {
            js.push(r % c.order);
            r /= c.order;
        }
        let ch = DirichletCharacter::from_values(m, |a| {
            let mut num = Rational::zero();
            for (c, &j) in comps.iter().zip(&js) {
                let l = c.log[(a % c.modulus) as usize]?;
                num += Rational::new((j * l).into(), c.order.into());
            }
            let fr = num.fract();
            let d = fr.denom().clone();
            let k = fr.numer().clone();
            Some((u64::try_from(k).unwrap(), u64::try_from(d).unwrap()))
        });
        out.push(ch);
    }
    debug_assert_eq!(out.len() as u64, euler_phi(m));
    Ok(out)
}

/// The quadratic character mod 3, `(−3/·)`.
pub fn chi_3_2() -> DirichletCharacter {
    DirichletCharacter::from_values(3, |a| Some(if a == 1 { (0, 1) } else { (1, 2) }))
}

/// The nontrivial character mod 4.
pub fn chi_4_2() -> DirichletCharacter {
    DirichletCharacter::from_values(4, |a| Some(if a == 1 { (0, 1) } else { (1, 2) }))
}

/// The character mod 5 with `χ(2) = i`.
pub fn chi_5_2() -> DirichletCharacter {
    DirichletCharacter::from_values(5, |a| {
        Some(match a {
            1 => (0, 1),
            2 => (1, 4),
            4 => (2, 4),
            _ => (3, 4),
        })
    })
}

/// The character mod 5 with `χ(2) = −i`, the cube (and conjugate) of
/// [`chi_5_2`].
pub fn chi_5_3() -> DirichletCharacter {
    chi_5_2().conj()
}

/// `Π_{p | n} (1 − χ(p)/p)`-type helper returning exact and numeric values of
/// `1 − χ(p)·p^{−s}` for integer `s`.
pub(crate) fn euler_factor(
    chi: &DirichletCharacter,
    p: u64,
    s: i64,
) -> (Option<GaussRational>, ComplexF) {
    let ps = Rational::from_integer(p.into()).pow(-s as i32);
    let num = ComplexF::one() - chi.value(p as i64) * (p as f64).powi(-s as i32);
    let ex = chi
        .value_exact(p as i64)
        .map(|v| gauss(int(1), int(0)) - v * gauss(ps.clone(), int(0)));
    (ex, num)
}
