//! Truncation-windowed formal series in `u^-1` (and in `u^-1, v^-1`).
//!
//! A series stores coefficients for exponents `k` with `lo <= k <= hi`,
//! where exponent `k` means `u^-k`; negative `k` is the polynomial part.
//! Everything below `lo` is known to be zero, everything above `hi` is
//! unknown (truncated). Arithmetic propagates windows so that each stored
//! coefficient of a result is exact:
//!
//! * sum: `lo = min(lo1, lo2)`, `hi = min(hi1, hi2)`
//! * product: `lo = lo1 + lo2`, `hi = min(hi1 + lo2, hi2 + lo1)`
//!
//! Equality between two series is only ever asserted on the intersection of
//! their windows, and verification reports state the window actually
//! checked.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::rat::{binomial, Rat};

/// Coefficient-ring interface required by the series engine: a Q-algebra
/// with a zero test and inversion of units.
pub trait CoeffRing: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn scale(&self, q: &Rat) -> Self;
    /// Inverse when the value is a unit of the coefficient ring.
    fn try_invert(&self) -> Option<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

impl CoeffRing for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn scale(&self, q: &Rat) -> Self {
        self * q
    }
    fn try_invert(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl CoeffRing for Element {
    fn zero_like(&self) -> Self {
        Element::zero()
    }
    fn one_like(&self) -> Self {
        Element::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Element::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Element::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Element::neg(self)
    }
    fn is_zero(&self) -> bool {
        Element::is_zero(self)
    }
    fn scale(&self, q: &Rat) -> Self {
        Element::scale(self, q)
    }
    fn try_invert(&self) -> Option<Self> {
        Element::try_invert(self)
    }
}

/// Exponent window `[lo, hi]` on which a series is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Self {
        Window { lo, hi }
    }

    pub fn order(hi: i64) -> Self {
        Window { lo: 0, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn intersect(&self, other: &Window) -> Window {
        Window { lo: self.lo.max(other.lo), hi: self.hi.min(other.hi) }
    }

    fn sum(&self, other: &Window) -> Window {
        Window { lo: self.lo.min(other.lo), hi: self.hi.min(other.hi) }
    }

    fn product(&self, other: &Window) -> Window {
        Window { lo: self.lo + other.lo, hi: (self.hi + other.lo).min(other.hi + self.lo) }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Formal series `sum_k c_k u^-k`, exact on its window.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    coeffs: BTreeMap<i64, C>,
    window: Window,
}

impl<C: CoeffRing> Series<C> {
    pub fn zero(window: Window) -> Self {
        Series { coeffs: BTreeMap::new(), window }
    }

    pub fn constant(c: C, hi: i64) -> Self {
        let mut s = Series::zero(Window::order(hi));
        s.set(0, c);
        s
    }

    pub fn monomial(k: i64, c: C, hi: i64) -> Self {
        let mut s = Series::zero(Window::new(k.min(0), hi));
        s.set(k, c);
        s
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (i64, C)>, window: Window) -> Self {
        let mut s = Series::zero(window);
        for (k, c) in pairs {
            s.set(k, c);
        }
        s
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// Coefficient of `u^-k`; `None` means zero (or outside the window).
    pub fn get(&self, k: i64) -> Option<&C> {
        self.coeffs.get(&k)
    }

    pub fn set(&mut self, k: i64, c: C) {
        assert!(
            k >= self.window.lo && k <= self.window.hi,
            "coefficient exponent {k} outside window {}",
            self.window
        );
        if c.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.coeffs.iter()
    }

    pub fn is_zero_on_window(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &Series<C>) -> Series<C> {
        let window = self.window.sum(&other.window);
        let mut out: Series<C> = Series::zero(window);
        for (k, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if *k < window.lo || *k > window.hi {
                continue;
            }
            let cur = match out.coeffs.get(k) {
                Some(prev) => prev.add(c),
                None => c.clone(),
            };
            if cur.is_zero() {
                out.coeffs.remove(k);
            } else {
                out.coeffs.insert(*k, cur);
            }
        }
        out
    }

    pub fn sub(&self, other: &Series<C>) -> Series<C> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(),
            window: self.window,
        }
    }

    pub fn scale(&self, q: &Rat) -> Series<C> {
        if num_traits::Zero::is_zero(q) {
            return Series::zero(self.window);
        }
        Series {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.scale(q))).collect(),
            window: self.window,
        }
    }

    pub fn scale_coeff(&self, c: &C) -> Series<C> {
        let mut out = Series::zero(self.window);
        for (k, x) in &self.coeffs {
            out.set(*k, c.mul(x));
        }
        out
    }

    pub fn mul(&self, other: &Series<C>) -> Series<C> {
        let window = self.window.product(&other.window);
        let mut out: Series<C> = Series::zero(window);
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                let k = k1 + k2;
                if k < window.lo || k > window.hi {
                    continue;
                }
                let prod = c1.mul(c2);
                if prod.is_zero() {
                    continue;
                }
                let cur = match out.coeffs.get(&k) {
                    Some(prev) => prev.add(&prod),
                    None => prod,
                };
                if cur.is_zero() {
                    out.coeffs.remove(&k);
                } else {
                    out.coeffs.insert(k, cur);
                }
            }
        }
        out
    }

    /// Multiply by `u^m` (m may be negative); exponents drop by `m`.
    pub fn mul_u_pow(&self, m: i64) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().map(|(k, c)| (k - m, c.clone())).collect(),
            window: Window::new(self.window.lo - m, self.window.hi - m),
        }
    }

    /// Substitute `u -> u + a`, expanding
    /// `(u+a)^-p = sum_q (-1)^q C(p+q-1, q) a^q u^(-p-q)` for `p >= 1` and
    /// the finite binomial expansion on the polynomial part. The window is
    /// unchanged: each exponent only receives contributions from exponents
    /// at or below it.
    pub fn shift(&self, a: &Rat) -> Series<C> {
        if num_traits::Zero::is_zero(a) {
            return self.clone();
        }
        let mut out: Series<C> = Series::zero(self.window);
        for (&p, c) in &self.coeffs {
            if p >= 1 {
                let mut apow = Rat::one();
                for q in 0..=(self.window.hi - p) {
                    let sign = if q % 2 == 0 { Rat::one() } else { -Rat::one() };
                    let coeff = sign * binomial((p + q - 1) as u64, q as u64) * &apow;
                    let k = p + q;
                    let term = c.scale(&coeff);
                    let cur = match out.coeffs.get(&k) {
                        Some(prev) => prev.add(&term),
                        None => term,
                    };
                    if cur.is_zero() {
                        out.coeffs.remove(&k);
                    } else {
                        out.coeffs.insert(k, cur);
                    }
                    apow *= a;
                }
            } else {
                // u^m with m = -p >= 0: (u+a)^m = sum_q C(m,q) a^q u^(m-q)
                let m = (-p) as u64;
                let mut apow = Rat::one();
                for q in 0..=m {
                    let coeff = binomial(m, q) * &apow;
                    let k = p + q as i64;
                    if k > self.window.hi {
                        break;
                    }
                    let term = c.scale(&coeff);
                    let cur = match out.coeffs.get(&k) {
                        Some(prev) => prev.add(&term),
                        None => term,
                    };
                    if cur.is_zero() {
                        out.coeffs.remove(&k);
                    } else {
                        out.coeffs.insert(k, cur);
                    }
                    apow *= a;
                }
            }
        }
        out
    }

    /// Two-sided inverse of a series with invertible constant term and no
    /// polynomial part.
    pub fn invert(&self) -> Result<Series<C>> {
        if self.window.lo < 0 && self.coeffs.keys().any(|k| *k < 0) {
            return Err(Error::NonUnitConstantTerm);
        }
        let c0 = self.coeffs.get(&0).ok_or(Error::NonUnitConstantTerm)?;
        let c0_inv = c0.try_invert().ok_or(Error::NonUnitConstantTerm)?;
        let hi = self.window.hi;
        let mut inv: BTreeMap<i64, C> = BTreeMap::new();
        inv.insert(0, c0_inv.clone());
        for k in 1..=hi {
            // e_k = -c0^-1 * sum_{a=1..k} c_a e_{k-a}
            let mut acc: Option<C> = None;
            for (a, ca) in self.coeffs.range(1..=k) {
                if let Some(e) = inv.get(&(k - a)) {
                    let prod = ca.mul(e);
                    acc = Some(match acc {
                        Some(x) => x.add(&prod),
                        None => prod,
                    });
                }
            }
            if let Some(x) = acc {
                let v = c0_inv.mul(&x).neg();
                if !v.is_zero() {
                    inv.insert(k, v);
                }
            }
        }
        Ok(Series { coeffs: inv, window: Window::order(hi) })
    }

    /// Restrict to a smaller window.
    pub fn truncate(&self, window: Window) -> Series<C> {
        let w = self.window.intersect(&window);
        Series {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| **k >= w.lo && **k <= w.hi)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            window: w,
        }
    }

    pub fn map<D: CoeffRing>(&self, mut f: impl FnMut(&C) -> D) -> Series<D> {
        let mut out: Series<D> = Series::zero(self.window);
        for (k, c) in &self.coeffs {
            out.set(*k, f(c));
        }
        out
    }

    /// Equality on the intersection of windows. On failure returns the
    /// offending exponent and the difference coefficient.
    pub fn eq_on_common(&self, other: &Series<C>) -> (bool, Window, Option<(i64, C)>) {
        let w = self.window.intersect(&other.window);
        let diff = self.sub(other).truncate(w);
        match diff.coeffs.into_iter().next() {
            None => (true, w, None),
            Some((k, c)) => (false, w, Some((k, c))),
        }
    }
}

/// Bivariate window (one per variable).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window2 {
    pub u: Window,
    pub v: Window,
}

impl Window2 {
    pub fn new(u: Window, v: Window) -> Self {
        Window2 { u, v }
    }

    pub fn order(hi: i64) -> Self {
        Window2 { u: Window::order(hi), v: Window::order(hi) }
    }

    pub fn intersect(&self, other: &Window2) -> Window2 {
        Window2 { u: self.u.intersect(&other.u), v: self.v.intersect(&other.v) }
    }

    fn sum(&self, other: &Window2) -> Window2 {
        Window2 { u: self.u.sum(&other.u), v: self.v.sum(&other.v) }
    }

    fn contains(&self, k: (i64, i64)) -> bool {
        k.0 >= self.u.lo && k.0 <= self.u.hi && k.1 >= self.v.lo && k.1 <= self.v.hi
    }
}

impl fmt::Display for Window2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u:{} v:{}", self.u, self.v)
    }
}

/// Truncated series in two variables `u^-1`, `v^-1` with bounded polynomial
/// parts. Exponent pair `(p, q)` means `u^-p v^-q`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries<C> {
    coeffs: BTreeMap<(i64, i64), C>,
    window: Window2,
}

impl<C: CoeffRing> BiSeries<C> {
    pub fn zero(window: Window2) -> Self {
        BiSeries { coeffs: BTreeMap::new(), window }
    }

    /// The product `a(u) * b(v)` of two univariate series in independent
    /// variables; exact on the full rectangle of the two windows.
    pub fn from_product(a: &Series<C>, b: &Series<C>) -> Self {
        let window = Window2::new(a.window(), b.window());
        let mut out = BiSeries::zero(window);
        for (p, ca) in a.iter() {
            for (q, cb) in b.iter() {
                let prod = ca.mul(cb);
                if !prod.is_zero() {
                    out.coeffs.insert((*p, *q), prod);
                }
            }
        }
        out
    }

    pub fn window(&self) -> Window2 {
        self.window
    }

    pub fn get(&self, k: (i64, i64)) -> Option<&C> {
        self.coeffs.get(&k)
    }

    pub fn set(&mut self, k: (i64, i64), c: C) {
        assert!(self.window.contains(k), "exponent {k:?} outside window {}", self.window);
        if c.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &C)> {
        self.coeffs.iter()
    }

    pub fn is_zero_on_window(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &BiSeries<C>) -> BiSeries<C> {
        let window = self.window.sum(&other.window);
        let mut out: BiSeries<C> = BiSeries::zero(window);
        for (k, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if !window.contains(*k) {
                continue;
            }
            let cur = match out.coeffs.get(k) {
                Some(prev) => prev.add(c),
                None => c.clone(),
            };
            if cur.is_zero() {
                out.coeffs.remove(k);
            } else {
                out.coeffs.insert(*k, cur);
            }
        }
        out
    }

    pub fn sub(&self, other: &BiSeries<C>) -> BiSeries<C> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BiSeries<C> {
        BiSeries {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(),
            window: self.window,
        }
    }

    pub fn scale(&self, q: &Rat) -> BiSeries<C> {
        if num_traits::Zero::is_zero(q) {
            return BiSeries::zero(self.window);
        }
        BiSeries {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.scale(q))).collect(),
            window: self.window,
        }
    }

    fn shift_exponents(&self, du: i64, dv: i64) -> BiSeries<C> {
        BiSeries {
            coeffs: self.coeffs.iter().map(|((p, q), c)| ((p + du, q + dv), c.clone())).collect(),
            window: Window2::new(
                Window::new(self.window.u.lo + du, self.window.u.hi + du),
                Window::new(self.window.v.lo + dv, self.window.v.hi + dv),
            ),
        }
    }

    /// Multiply by the linear polynomial `u - v - c`.
    pub fn mul_u_minus_v_minus(&self, c: &Rat) -> BiSeries<C> {
        let by_u = self.shift_exponents(-1, 0);
        let by_v = self.shift_exponents(0, -1);
        by_u.sub(&by_v).sub(&self.scale(c))
    }

    pub fn truncate(&self, window: Window2) -> BiSeries<C> {
        let w = self.window.intersect(&window);
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| w.contains(**k))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            window: w,
        }
    }

    pub fn map<D: CoeffRing>(&self, mut f: impl FnMut(&C) -> D) -> BiSeries<D> {
        let mut out: BiSeries<D> = BiSeries::zero(self.window);
        for (k, c) in &self.coeffs {
            out.set(*k, f(c));
        }
        out
    }

    pub fn eq_on_common(&self, other: &BiSeries<C>) -> (bool, Window2, Option<((i64, i64), C)>) {
        let w = self.window.intersect(&other.window);
        let diff = self.sub(other).truncate(w);
        match diff.coeffs.into_iter().next() {
            None => (true, w, None),
            Some((k, c)) => (false, w, Some((k, c))),
        }
    }
}

/// Generating series `t_ij(u) = delta_ij + sum_{r>=1} t^(r)_{ij} u^-r`,
/// truncated at order `hi`.
pub fn gen_series(i: u8, j: u8, hi: i64) -> Series<Element> {
    let mut s = Series::zero(Window::order(hi));
    if i == j {
        s.set(0, Element::one());
    }
    for r in 1..=hi {
        s.set(r, Element::generator(r as u32, i, j));
    }
    s
}

/// `[a(u), b(v)]` as a bivariate series: coefficientwise commutators.
pub fn commutator_biseries(a: &Series<Element>, b: &Series<Element>) -> BiSeries<Element> {
    BiSeries::from_product(a, b).sub(&transpose_product(b, a))
}

/// `b(v) * a(u)` laid out with `u` first: coefficient of `u^-p v^-q` is
/// `b_q * a_p`.
fn transpose_product(b: &Series<Element>, a: &Series<Element>) -> BiSeries<Element> {
    let window = Window2::new(a.window(), b.window());
    let mut out = BiSeries::zero(window);
    for (q, cb) in b.iter() {
        for (p, ca) in a.iter() {
            let prod = cb.mul(ca);
            if !prod.is_zero() {
                out.set((*p, *q), prod);
            }
        }
    }
    out
}

/// Residual of the defining relation in series form, cleared of its
/// denominator: `(u - v) [t_ij(u), t_kl(v)] - (t_kj(u) t_il(v) - t_kj(v) t_il(u))`.
pub fn defining_relation_series_residual(i: u8, j: u8, k: u8, l: u8, hi: i64) -> BiSeries<Element> {
    let tij = gen_series(i, j, hi);
    let tkl = gen_series(k, l, hi);
    let tkj = gen_series(k, j, hi);
    let til = gen_series(i, l, hi);
    let comm = commutator_biseries(&tij, &tkl).mul_u_minus_v_minus(&Rat::zero());
    let rhs = BiSeries::from_product(&tkj, &til).sub(&transpose_product(&tkj, &til));
    comm.sub(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;
    use proptest::prelude::*;

    fn rs(pairs: &[(i64, i64)], hi: i64) -> Series<Rat> {
        Series::from_coeffs(
            pairs.iter().map(|(k, c)| (*k, rat_int(*c))),
            Window::order(hi),
        )
    }

    #[test]
    fn gen_series_examples() {
        let s = gen_series(1, 1, 2);
        assert_eq!(s.get(0), Some(&Element::one()));
        assert_eq!(s.get(1), Some(&Element::generator(1, 1, 1)));
        assert_eq!(s.get(2), Some(&Element::generator(2, 1, 1)));

        let z = gen_series(1, 2, 0);
        assert!(z.is_zero_on_window());

        let t = gen_series(2, 2, 1);
        assert_eq!(t.get(0), Some(&Element::one()));
        assert_eq!(t.get(1), Some(&Element::generator(1, 2, 2)));
    }

    #[test]
    fn shift_of_u_inverse_is_alternating_geometric() {
        // (u+a)^-1 = u^-1 - a u^-2 + a^2 u^-3 - ...
        let s = rs(&[(1, 1)], 4);
        let a = rat_int(2);
        let sh = s.shift(&a);
        assert_eq!(sh.get(1), Some(&rat_int(1)));
        assert_eq!(sh.get(2), Some(&rat_int(-2)));
        assert_eq!(sh.get(3), Some(&rat_int(4)));
        assert_eq!(sh.get(4), Some(&rat_int(-8)));
    }

    #[test]
    fn shift_by_zero_is_identity() {
        let s = rs(&[(0, 3), (1, 1), (2, -5)], 3);
        assert_eq!(s.shift(&Rat::zero()), s);
    }

    #[test]
    fn shift_binomial_oracle_coefficient() {
        // coefficient of u^-3 in (u+1)^-1 is (-1)^2 C(2,2) = +1
        let s = rs(&[(1, 1)], 5);
        let sh = s.shift(&rat_int(1));
        assert_eq!(sh.get(3), Some(&rat_int(1)));
        // independent binomial oracle for each coefficient
        for q in 0..=4i64 {
            let sign = if q % 2 == 0 { 1 } else { -1 };
            let expect = binomial((q) as u64, q as u64) * rat_int(sign);
            assert_eq!(sh.get(1 + q).cloned().unwrap_or_else(Rat::zero), expect);
        }
    }

    #[test]
    fn shift_polynomial_part_is_exact() {
        // u (i.e. exponent -1): (u+3) = u + 3
        let s = Series::from_coeffs(vec![(-1i64, rat_int(1))], Window::new(-1, 2));
        let sh = s.shift(&rat_int(3));
        assert_eq!(sh.get(-1), Some(&rat_int(1)));
        assert_eq!(sh.get(0), Some(&rat_int(3)));
        assert_eq!(sh.get(1), None);
    }

    #[test]
    fn shift_composes_additively() {
        let s = rs(&[(1, 2), (3, -1)], 5);
        let a = Rat::new(1.into(), 2.into());
        let b = rat_int(-3);
        let lhs = s.shift(&a).shift(&b);
        let rhs = s.shift(&(a + b));
        let (eq, w, _) = lhs.eq_on_common(&rhs);
        assert!(eq, "shift composition failed on {w}");
    }

    #[test]
    fn invert_geometric() {
        // (1 + x u^-1)^-1 = 1 - x u^-1 + x^2 u^-2 - ...  with x = t^(1)_{11}
        let x = Element::generator(1, 1, 1);
        let mut s = Series::zero(Window::order(3));
        s.set(0, Element::one());
        s.set(1, x.clone());
        let inv = s.invert().unwrap();
        assert_eq!(inv.get(0), Some(&Element::one()));
        assert_eq!(inv.get(1), Some(&x.neg()));
        assert_eq!(inv.get(2), Some(&x.mul(&x)));
        assert_eq!(inv.get(3), Some(&x.mul(&x).mul(&x).neg()));
        // two-sided on the window
        let prod = s.mul(&inv);
        assert_eq!(prod.get(0), Some(&Element::one()));
        assert!(prod.iter().filter(|(k, _)| **k > 0).count() == 0);
        let prod2 = inv.mul(&s);
        assert_eq!(prod2.get(0), Some(&Element::one()));
        assert!(prod2.iter().filter(|(k, _)| **k > 0).count() == 0);
    }

    #[test]
    fn invert_one_is_one() {
        let one: Series<Rat> = Series::constant(Rat::one(), 4);
        assert_eq!(one.invert().unwrap(), one);
    }

    #[test]
    fn invert_rejects_zero_constant_term() {
        let s = gen_series(1, 2, 3);
        assert_eq!(s.invert().unwrap_err(), Error::NonUnitConstantTerm);
    }

    #[test]
    fn product_window_of_two_order_windows() {
        let a = rs(&[(0, 1), (3, 5)], 3);
        let b = rs(&[(0, 2), (1, 7)], 3);
        assert_eq!(a.mul(&b).window(), Window::order(3));
    }

    #[test]
    fn defining_relation_series_residual_vanishes() {
        for n in 2..=2u8 {
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        for l in 1..=n {
                            let r = defining_relation_series_residual(i, j, k, l, 4);
                            assert!(
                                r.is_zero_on_window(),
                                "defining relation fails at ({i},{j},{k},{l}): {:?}",
                                r.iter().next()
                            );
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn shift_is_ring_homomorphism(
            a in -3i64..=3,
            xs in proptest::collection::vec((0i64..=4, -5i64..=5), 1..4),
            ys in proptest::collection::vec((0i64..=4, -5i64..=5), 1..4),
        ) {
            let a = rat_int(a);
            let s = rs(&xs, 4);
            let t = rs(&ys, 4);
            let lhs = s.mul(&t).shift(&a);
            let rhs = s.shift(&a).mul(&t.shift(&a));
            let (eq, w, bad) = lhs.eq_on_common(&rhs);
            prop_assert!(eq, "mismatch on {} at {:?}", w, bad);
        }

        #[test]
        fn inversion_is_two_sided(
            xs in proptest::collection::vec((1i64..=4, -5i64..=5), 0..4),
        ) {
            let mut s = rs(&xs, 4);
            s.set(0, rat_int(3));
            let inv = s.invert().unwrap();
            let one: Series<Rat> = Series::constant(Rat::one(), 4);
            let (l, _, _) = s.mul(&inv).eq_on_common(&one);
            let (r, _, _) = inv.mul(&s).eq_on_common(&one);
            prop_assert!(l && r);
        }
    }
}
