//! Yangian determinants `t^I_J(u)` and the identity families they satisfy.
//!
//! The determinant of the submatrix with row tuple `I` and column tuple `J`
//! (both of size d) is the signed permutation sum of generating series with
//! staggered arguments `u, u-1, ..., u-d+1`. It is alternating in rows and
//! in columns, so misordered tuples reduce to a signed sorted minor and
//! repeated indices give zero; computed sorted minors are memoized
//! process-wide.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::rat::{factorial, rat_int, Rat};
use crate::series::{gen_series, BiSeries, Series, Window, Window2};

/// A row or column index tuple; repeats allowed until sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(pub Vec<u8>);

impl IndexTuple {
    pub fn new(entries: impl Into<Vec<u8>>) -> Self {
        IndexTuple(entries.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sort the tuple, returning `(sorted, sign)`; sign 0 flags a repeat.
    pub fn sort_with_sign(&self) -> (IndexTuple, i8) {
        let mut v = self.0.clone();
        let mut sign = 1i8;
        // insertion sort, counting adjacent swaps
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|p| p[0] == p[1]) {
            return (IndexTuple(v), 0);
        }
        (IndexTuple(v), sign)
    }

    pub fn concat(&self, other: &IndexTuple) -> IndexTuple {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        IndexTuple(v)
    }
}

impl From<&[u8]> for IndexTuple {
    fn from(s: &[u8]) -> Self {
        IndexTuple(s.to_vec())
    }
}

/// Sign `(-1)^l(head|rest)` of the concatenated tuple, or 0 on repeats.
pub fn inversion_sign(head: &[u8], rest: &[u8]) -> i8 {
    let mut v: Vec<u8> = Vec::with_capacity(head.len() + rest.len());
    v.extend_from_slice(head);
    v.extend_from_slice(rest);
    IndexTuple(v).sort_with_sign().1
}

/// Key identifying a shifted, truncated minor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorKey {
    pub rows: IndexTuple,
    pub cols: IndexTuple,
    pub shift: Rat,
    pub order: i64,
}

/// Which of the two equivalent permutation-sum forms to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DetVariant {
    Rows,
    Cols,
}

fn permutations(d: usize) -> Vec<(Vec<usize>, i8)> {
    fn go(cur: &mut Vec<usize>, rest: &mut Vec<usize>, sign: i8, out: &mut Vec<(Vec<usize>, i8)>) {
        if rest.is_empty() {
            out.push((cur.clone(), sign));
            return;
        }
        for pos in 0..rest.len() {
            let x = rest.remove(pos);
            cur.push(x);
            let s = if pos % 2 == 0 { sign } else { -sign };
            go(cur, rest, s, out);
            cur.pop();
            rest.insert(pos, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..d).collect(), 1, &mut out);
    out
}

/// Permutation sum for the given tuples exactly as written, without
/// canonicalizing the tuples first. Both variants agree on the window; the
/// rows form staggers column position m at `u-m+1`, the cols form staggers
/// row position m at `u-d+m`.
pub fn ydet_raw(rows: &[u8], cols: &[u8], variant: DetVariant, hi: i64) -> Series<Element> {
    assert_eq!(rows.len(), cols.len(), "minor needs equal row and column counts");
    let d = rows.len();
    if d == 0 {
        return Series::constant(Element::one(), hi);
    }
    let mut acc = Series::zero(Window::order(hi));
    for (perm, sign) in permutations(d) {
        let mut prod: Option<Series<Element>> = None;
        match variant {
            DetVariant::Rows => {
                for m in 0..d {
                    let f = gen_series(rows[perm[m]], cols[m], hi).shift(&rat_int(-(m as i64)));
                    prod = Some(match prod {
                        None => f,
                        Some(p) => p.mul(&f),
                    });
                }
            }
            DetVariant::Cols => {
                for m in 0..d {
                    let f = gen_series(rows[m], cols[perm[m]], hi)
                        .shift(&rat_int(-((d - 1 - m) as i64)));
                    prod = Some(match prod {
                        None => f,
                        Some(p) => p.mul(&f),
                    });
                }
            }
        }
        let term = prod.unwrap();
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

type MemoKey = (Vec<u8>, Vec<u8>, i64);

fn memo() -> &'static RwLock<HashMap<MemoKey, Arc<Series<Element>>>> {
    static MEMO: std::sync::OnceLock<RwLock<HashMap<MemoKey, Arc<Series<Element>>>>> =
        std::sync::OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The minor `t^I_J(u + shift)` truncated at `u^-order`.
///
/// Tuples are canonicalized through the alternating property; the sorted
/// minor is computed once (rows form) and cached, and the shift is applied
/// at the series level.
pub fn ydet(key: &MinorKey) -> Series<Element> {
    let (rs, sr) = key.rows.sort_with_sign();
    let (cs, sc) = key.cols.sort_with_sign();
    if sr == 0 || sc == 0 {
        return Series::zero(Window::order(key.order));
    }
    let mk: MemoKey = (rs.0.clone(), cs.0.clone(), key.order);
    let base = {
        let hit = memo().read().unwrap().get(&mk).cloned();
        match hit {
            Some(s) => s,
            None => {
                let computed = Arc::new(ydet_raw(&rs.0, &cs.0, DetVariant::Rows, key.order));
                memo().write().unwrap().entry(mk).or_insert_with(|| computed.clone());
                computed
            }
        }
    };
    let mut out = base.shift(&key.shift);
    if sr * sc < 0 {
        out = out.neg();
    }
    out
}

/// Convenience wrapper: `t^I_J(u + a)` at truncation `hi`.
pub fn minor(rows: &[u8], cols: &[u8], a: i64, hi: i64) -> Series<Element> {
    ydet(&MinorKey {
        rows: IndexTuple::new(rows),
        cols: IndexTuple::new(cols),
        shift: rat_int(a),
        order: hi,
    })
}

/// Left quasi-Plücker coordinate of `T(u)` through the minor factorization
/// `p^K_ab = t^[d]_{a|K}(u+d-1)^-1 t^[d]_{b|K}(u+d-1)`, where `d = |K|+1`.
///
/// Requires `{a} ∪ K = [d]` as sets so that the inverted minor has unit
/// constant term.
pub fn quasi_plucker_minor(a: u8, b: u8, k: &[u8], hi: i64) -> Result<Series<Element>> {
    let d = k.len() + 1;
    let mut ak: Vec<u8> = vec![a];
    ak.extend_from_slice(k);
    let mut sorted = ak.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted != (1..=d as u8).collect::<Vec<u8>>() {
        return Err(Error::NonUnitConstantTerm);
    }
    let rows: Vec<u8> = (1..=d as u8).collect();
    let mut bk: Vec<u8> = vec![b];
    bk.extend_from_slice(k);
    let left = minor(&rows, &ak, d as i64 - 1, hi).invert()?;
    Ok(left.mul(&minor(&rows, &bk, d as i64 - 1, hi)))
}

/// Outcome of one mechanical identity verification.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub window: String,
    pub residual_terms: usize,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.residual_terms == 0
    }

    fn from_series(s: &Series<Element>) -> Self {
        CheckOutcome {
            window: format!("u:{}", s.window()),
            residual_terms: s.term_count(),
            counterexample: s
                .iter()
                .next()
                .map(|(k, c)| format!("u^-{k}: {c}")),
        }
    }

    fn from_biseries(s: &BiSeries<Element>) -> Self {
        CheckOutcome {
            window: format!("{}", s.window()),
            residual_terms: s.term_count(),
            counterexample: s
                .iter()
                .next()
                .map(|((p, q), c)| format!("u^-{p} v^-{q}: {c}")),
        }
    }

    fn join(self, other: CheckOutcome) -> CheckOutcome {
        CheckOutcome {
            window: if self.window == other.window {
                self.window
            } else {
                format!("{}; {}", self.window, other.window)
            },
            residual_terms: self.residual_terms + other.residual_terms,
            counterexample: self.counterexample.or(other.counterexample),
        }
    }
}

fn outcome_eq(a: &Series<Element>, b: &Series<Element>) -> CheckOutcome {
    let (ok, w, bad) = a.eq_on_common(b);
    CheckOutcome {
        window: format!("u:{w}"),
        residual_terms: if ok { 0 } else { 1 },
        counterexample: bad.map(|(k, c)| format!("u^-{k}: {c}")),
    }
}

/// Subsets of `{0, .., len-1}` of the given size, each with the sign of the
/// shuffle placing the subset in front of its complement.
pub fn subset_shuffles(len: usize, size: usize) -> Vec<(Vec<usize>, Vec<usize>, i8)> {
    fn go(
        start: usize,
        len: usize,
        size: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>, i8)>,
    ) {
        if cur.len() == size {
            let comp: Vec<usize> = (0..len).filter(|p| !cur.contains(p)).collect();
            // sign = parity of inversions of (cur | comp) as a permutation
            let mut word: Vec<usize> = cur.clone();
            word.extend_from_slice(&comp);
            let mut sign = 1i8;
            for a in 0..word.len() {
                for b in a + 1..word.len() {
                    if word[a] > word[b] {
                        sign = -sign;
                    }
                }
            }
            out.push((cur.clone(), comp, sign));
            return;
        }
        for p in start..len {
            cur.push(p);
            go(p + 1, len, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, size, &mut Vec::new(), &mut out);
    out
}

fn pick(tuple: &[u8], positions: &[usize]) -> Vec<u8> {
    positions.iter().map(|&p| tuple[p]).collect()
}

/// Row cofactor expansion: splitting off the first `r` rows,
///
/// ```text
/// sum_{|Λ|=r} (-1)^l(Λ|rest) t^{I_[r]}_{J_Λ}(u-d+r) t^{I∖I_[r]}_{J∖J_Λ}(u) = t^I_J(u)
/// ```
pub fn laplace_row_residual(rows: &[u8], cols: &[u8], r: usize, hi: i64) -> CheckOutcome {
    let d = rows.len();
    assert!(r >= 1 && r < d);
    let mut acc = Series::zero(Window::order(hi));
    for (lam, comp, sign) in subset_shuffles(d, r) {
        let first = minor(&rows[..r], &pick(cols, &lam), -(d as i64) + r as i64, hi);
        let second = minor(&rows[r..], &pick(cols, &comp), 0, hi);
        let term = first.mul(&second);
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    CheckOutcome::from_series(&acc.sub(&minor(rows, cols, 0, hi)))
}

/// Column cofactor expansion: splitting off the first `r` columns,
///
/// ```text
/// sum_{|Λ|=r} (-1)^l(Λ|rest) t^{I_Λ}_{J_[r]}(u) t^{I∖I_Λ}_{J∖J_[r]}(u-d+r) = t^I_J(u)
/// ```
pub fn laplace_col_residual(rows: &[u8], cols: &[u8], r: usize, hi: i64) -> CheckOutcome {
    let d = rows.len();
    assert!(r >= 1 && r < d);
    let mut acc = Series::zero(Window::order(hi));
    for (lam, comp, sign) in subset_shuffles(d, r) {
        let first = minor(&pick(rows, &lam), &cols[..r], 0, hi);
        let second = minor(&pick(rows, &comp), &cols[r..], -(d as i64) + r as i64, hi);
        let term = first.mul(&second);
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    CheckOutcome::from_series(&acc.sub(&minor(rows, cols, 0, hi)))
}

/// `[t^I_J(u), t^{I'}_{J'}(v)] = 0` for subsequences `I' ⊆ I`, `J' ⊆ J`,
/// checked coefficientwise as a bivariate series.
pub fn commuting_residual(
    rows: &[u8],
    cols: &[u8],
    sub_rows: &[u8],
    sub_cols: &[u8],
    hi: i64,
) -> CheckOutcome {
    let a = minor(rows, cols, 0, hi);
    let b = minor(sub_rows, sub_cols, 0, hi);
    let mut residual = BiSeries::zero(Window2::order(hi));
    for (p, ca) in a.iter() {
        for (q, cb) in b.iter() {
            residual.set((*p, *q), ca.commutator(cb));
        }
    }
    CheckOutcome::from_biseries(&residual)
}

/// The general commutator of two minors, cleared of denominators.
///
/// For `|A| = |I| = e >= d = |B| = |J|`,
///
/// ```text
/// [t^A_I(u), t^B_J(v)] = sum_{p=1..d} (-1)^(p-1) p! / ((u-v-e+1)...(u-v-e+p)) (S1_p - S2_p)
/// ```
///
/// with `S1_p` summing row swaps between A and B (positions k in A get the
/// B-values at positions l, and vice versa) and `S2_p` the column swaps
/// between I and J with the arguments u, v exchanged. Both sides are
/// multiplied by the full product `prod_{k=1..d}(u-v-e+k)`, each p-summand
/// keeping its residual polynomial factor.
pub fn minor_commutator_residual(
    a_rows: &[u8],
    i_cols: &[u8],
    b_rows: &[u8],
    j_cols: &[u8],
    hi: i64,
) -> CheckOutcome {
    let e = a_rows.len();
    let d = b_rows.len();
    assert!(d <= e, "first minor must be the larger one");
    assert_eq!(i_cols.len(), e);
    assert_eq!(j_cols.len(), d);

    let au = minor(a_rows, i_cols, 0, hi);
    let bv = minor(b_rows, j_cols, 0, hi);
    // commutator term, fully cleared
    let mut lhs = {
        let mut comm = BiSeries::from_product(&au, &bv);
        let mut rev = BiSeries::zero(Window2::order(hi));
        for (q, cb) in bv.iter() {
            for (p, ca) in au.iter() {
                let prod = cb.mul(ca);
                if !crate::series::CoeffRing::is_zero(&prod) {
                    rev.set((*p, *q), prod);
                }
            }
        }
        comm = comm.sub(&rev);
        for k in 1..=d as i64 {
            comm = comm.mul_u_minus_v_minus(&rat_int(-(e as i64) + k));
        }
        comm
    };

    for p in 1..=d {
        let sign = if p % 2 == 1 { Rat::one() } else { -Rat::one() };
        let pref = sign * factorial(p as u64);
        let mut inner = BiSeries::zero(Window2::order(hi));

        // positions in A (size e) and in B (size d)
        for (ks, _, _) in subset_shuffles(e, p) {
            for (ls, _, _) in subset_shuffles(d, p) {
                // rows of A with positions ks replaced by B-values at ls
                let mut a_mod = a_rows.to_vec();
                let mut b_mod = b_rows.to_vec();
                for (t, (&kp, &lp)) in ks.iter().zip(ls.iter()).enumerate() {
                    let _ = t;
                    a_mod[kp] = b_rows[lp];
                    b_mod[lp] = a_rows[kp];
                }
                let first = BiSeries::from_product(
                    &minor(&a_mod, i_cols, 0, hi),
                    &minor(&b_mod, j_cols, 0, hi),
                );
                // columns of I at positions ks replaced by J-values at ls,
                // arguments exchanged (first factor in v, second in u)
                let mut i_mod = i_cols.to_vec();
                let mut j_mod = j_cols.to_vec();
                for (&kp, &lp) in ks.iter().zip(ls.iter()) {
                    i_mod[kp] = j_cols[lp];
                    j_mod[lp] = i_cols[kp];
                }
                let av = minor(a_rows, &i_mod, 0, hi);
                let bu = minor(b_rows, &j_mod, 0, hi);
                let mut second = BiSeries::zero(Window2::order(hi));
                for (q, ca) in av.iter() {
                    for (pk, cb) in bu.iter() {
                        let prod = ca.mul(cb);
                        if !crate::series::CoeffRing::is_zero(&prod) {
                            second.set((*pk, *q), prod);
                        }
                    }
                }
                inner = inner.add(&first).sub(&second);
            }
        }

        let mut term = inner.scale(&pref);
        for k in p + 1..=d {
            term = term.mul_u_minus_v_minus(&rat_int(-(e as i64) + k as i64));
        }
        // pad the cleared window so both sides line up
        lhs = lhs.sub(&term.truncate(lhs.window()));
    }
    CheckOutcome::from_biseries(&lhs)
}

/// Inverse-minor matrix identities.
///
/// With `X = t^I_J(u+d-1)` and cofactors `C_{lk} = t^{I∖i_l}_{J∖j_k}(u+d-1)`,
/// the matrix `S = ((-1)^{k+l} X^-1 C_{lk})` satisfies `S T = T S = 1`
/// against the submatrix `T = (t_{i_k j_l}(u))`. Cleared of the inverse,
/// that is
///
/// ```text
/// sum_l (-1)^{k+l} C_{lk} t_{i_l j_m}(u) = δ_km X        (S T)
/// sum_l (-1)^{l+m} t_{i_k j_l}(u) C_{ml} = δ_km X        (T S)
/// ```
///
/// The cleared forms are checked for every pair of tuples; when `I` and `J`
/// coincide as sets the constant term of `X` is invertible and the direct
/// products with the actual series inverse are checked as well.
pub fn inverse_minor_residual(rows: &[u8], cols: &[u8], hi: i64, ts_side: bool) -> CheckOutcome {
    let d = rows.len();
    let shift = d as i64 - 1;
    let x = minor(rows, cols, shift, hi);
    let mut outcome: Option<CheckOutcome> = None;

    let del = |t: &[u8], skip: usize| -> Vec<u8> {
        t.iter().enumerate().filter(|(p, _)| *p != skip).map(|(_, &v)| v).collect()
    };

    for k in 0..d {
        for m in 0..d {
            let mut acc = Series::zero(Window::order(hi));
            for l in 0..d {
                let term = if !ts_side {
                    // cofactor first, entry second
                    let cof = minor(&del(rows, l), &del(cols, k), shift, hi);
                    cof.mul(&gen_series(rows[l], cols[m], hi))
                } else {
                    let cof = minor(&del(rows, m), &del(cols, l), shift, hi);
                    gen_series(rows[k], cols[l], hi).mul(&cof)
                };
                let sign = if !ts_side { (k + l) % 2 == 0 } else { (l + m) % 2 == 0 };
                acc = if sign { acc.add(&term) } else { acc.sub(&term) };
            }
            if k == m {
                acc = acc.sub(&x);
            }
            let here = CheckOutcome::from_series(&acc);
            outcome = Some(match outcome {
                None => here,
                Some(o) => o.join(here),
            });
        }
    }

    // direct check with the genuine inverse when X has unit constant term
    let mut rset = rows.to_vec();
    rset.sort_unstable();
    let mut cset = cols.to_vec();
    cset.sort_unstable();
    if rset == cset {
        let xinv = x.invert().expect("principal-type minor must be invertible");
        for k in 0..d {
            for m in 0..d {
                let mut acc = Series::zero(Window::order(hi));
                for l in 0..d {
                    let term = if !ts_side {
                        let s_entry = xinv.mul(&minor(&del(rows, l), &del(cols, k), shift, hi));
                        s_entry.mul(&gen_series(rows[l], cols[m], hi))
                    } else {
                        let s_entry = xinv.mul(&minor(&del(rows, m), &del(cols, l), shift, hi));
                        gen_series(rows[k], cols[l], hi).mul(&s_entry)
                    };
                    let sign = if !ts_side { (k + l) % 2 == 0 } else { (l + m) % 2 == 0 };
                    acc = if sign { acc.add(&term) } else { acc.sub(&term) };
                }
                if k == m {
                    acc = acc.sub(&Series::constant(Element::one(), hi));
                }
                let here = CheckOutcome::from_series(&acc);
                outcome = Some(match outcome {
                    None => here,
                    Some(o) => o.join(here),
                });
            }
        }
    }
    outcome.unwrap()
}

/// Weak q-commuting: `t^L_{a|K}(u) t^L_{b|K}(u+1) = t^L_{b|K}(u) t^L_{a|K}(u+1)`.
pub fn weak_qcomm_residual(l_rows: &[u8], a: u8, b: u8, k: &[u8], hi: i64) -> CheckOutcome {
    let col = |first: u8| -> Vec<u8> {
        let mut v = vec![first];
        v.extend_from_slice(k);
        v
    };
    let lhs = minor(l_rows, &col(a), 0, hi).mul(&minor(l_rows, &col(b), 1, hi));
    let rhs = minor(l_rows, &col(b), 0, hi).mul(&minor(l_rows, &col(a), 1, hi));
    CheckOutcome::from_series(&lhs.sub(&rhs))
}

/// The Young-symmetry sum
///
/// ```text
/// Y_(p)(I, J; shift2) = sum_{Λ⊆J, |Λ|=p} (-1)^l(Λ|J∖Λ) t^[d]_{I|Λ}(u+d) t^[e]_{J∖Λ}(u+shift2)
/// ```
///
/// where `d = |I|+p` and `e = |J|-p`. With `shift2 = e+1` this is the
/// single-transfer exchange family; with `shift2 = e+p` the second variant.
pub fn young_symmetry_sum(i_cols: &[u8], j_set: &[u8], p: usize, shift2: i64, hi: i64) -> Series<Element> {
    let d = i_cols.len() + p;
    let e = j_set.len() - p;
    let rows_d: Vec<u8> = (1..=d as u8).collect();
    let rows_e: Vec<u8> = (1..=e as u8).collect();
    let mut acc = Series::zero(Window::order(hi));
    for (lam, comp, sign) in subset_shuffles(j_set.len(), p) {
        let mut first_cols = i_cols.to_vec();
        first_cols.extend(pick(j_set, &lam));
        let first = minor(&rows_d, &first_cols, d as i64, hi);
        let second = minor(&rows_e, &pick(j_set, &comp), shift2, hi);
        let term = first.mul(&second);
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

pub fn ys_lemma_residual(i_cols: &[u8], j_set: &[u8], hi: i64) -> CheckOutcome {
    let e = j_set.len() - 1;
    CheckOutcome::from_series(&young_symmetry_sum(i_cols, j_set, 1, e as i64 + 1, hi))
}

pub fn ys_i_residual(i_cols: &[u8], j_set: &[u8], p: usize, hi: i64) -> CheckOutcome {
    let e = j_set.len() - p;
    CheckOutcome::from_series(&young_symmetry_sum(i_cols, j_set, p, e as i64 + 1, hi))
}

pub fn ys_ii_residual(i_cols: &[u8], j_set: &[u8], p: usize, hi: i64) -> CheckOutcome {
    let e = j_set.len() - p;
    CheckOutcome::from_series(&young_symmetry_sum(i_cols, j_set, p, (e + p) as i64, hi))
}

/// The recursion reducing the p-transfer sum to (p-1)-transfer sums:
///
/// ```text
/// p * Y_(p)(I, J) = sum_{λ∈J} (-1)^l(λ|J∖λ) Y_(p-1)(I|λ, J∖λ)
/// ```
pub fn ys_recursion_residual(i_cols: &[u8], j_set: &[u8], p: usize, hi: i64) -> CheckOutcome {
    assert!(p >= 1);
    let e = j_set.len() - p;
    let lhs = young_symmetry_sum(i_cols, j_set, p, e as i64 + 1, hi).scale(&rat_int(p as i64));
    let mut rhs = Series::zero(Window::order(hi));
    for (lam, comp, sign) in subset_shuffles(j_set.len(), 1) {
        let mut i_ext = i_cols.to_vec();
        i_ext.extend(pick(j_set, &lam));
        let term = young_symmetry_sum(&i_ext, &pick(j_set, &comp), p - 1, e as i64 + 1, hi);
        rhs = if sign > 0 { rhs.add(&term) } else { rhs.sub(&term) };
    }
    CheckOutcome::from_series(&lhs.sub(&rhs))
}

/// The two Laplace-expansion ingredients behind the second Young-symmetry
/// variant: for each row subset `K ⊆ [d]` of size p,
///
/// * the mixed column expansion
///   `t^[d]_{I|Λ}(u+d) = sum_K (-1)^l([d]∖K|K) t^{[d]∖K}_I(u+d) t^K_Λ(u+p)`,
/// * the collapse
///   `sum_Λ (-1)^l(Λ|J∖Λ) t^K_Λ(u+p) t^[e]_{J∖Λ}(u+e+p) = t^{K|[e]}_J(u+e+p) = 0`
///   because the row tuple `K|[e]` has repeats.
pub fn ys_ii_mechanism_residual(i_cols: &[u8], j_set: &[u8], p: usize, hi: i64) -> CheckOutcome {
    let d = i_cols.len() + p;
    let e = j_set.len() - p;
    let rows_d: Vec<u8> = (1..=d as u8).collect();
    let rows_e: Vec<u8> = (1..=e as u8).collect();
    let mut outcome: Option<CheckOutcome> = None;
    let mut push = |o: CheckOutcome, outcome: &mut Option<CheckOutcome>| {
        *outcome = Some(match outcome.take() {
            None => o,
            Some(prev) => prev.join(o),
        });
    };

    // mixed column expansion for every Λ ⊆ J of size p
    for (lam, _, _) in subset_shuffles(j_set.len(), p) {
        let lam_vals = pick(j_set, &lam);
        let mut cols_full = i_cols.to_vec();
        cols_full.extend_from_slice(&lam_vals);
        let direct = minor(&rows_d, &cols_full, d as i64, hi);
        let mut expansion = Series::zero(Window::order(hi));
        for (kpos, comp, _) in subset_shuffles(d, p) {
            let sign = inversion_sign(
                &comp.iter().map(|&x| x as u8 + 1).collect::<Vec<u8>>(),
                &kpos.iter().map(|&x| x as u8 + 1).collect::<Vec<u8>>(),
            );
            let first = minor(&pick(&rows_d, &comp), i_cols, d as i64, hi);
            let second = minor(&pick(&rows_d, &kpos), &lam_vals, p as i64, hi);
            let term = first.mul(&second);
            expansion = if sign > 0 { expansion.add(&term) } else { expansion.sub(&term) };
        }
        push(outcome_eq(&direct, &expansion), &mut outcome);
    }

    // collapse of the inner sum for every K
    for (kpos, _, _) in subset_shuffles(d, p) {
        let k_rows = pick(&rows_d, &kpos);
        let mut inner = Series::zero(Window::order(hi));
        for (lam, comp, sign) in subset_shuffles(j_set.len(), p) {
            let first = minor(&k_rows, &pick(j_set, &lam), p as i64, hi);
            let second = minor(&rows_e, &pick(j_set, &comp), (e + p) as i64, hi);
            let term = first.mul(&second);
            inner = if sign > 0 { inner.add(&term) } else { inner.sub(&term) };
        }
        // the combined row tuple K|[e] always has a repeat, so the sum
        // collapses to the zero minor
        let mut combined_rows = k_rows.clone();
        combined_rows.extend_from_slice(&rows_e);
        let mut combined_cols = j_set.to_vec();
        combined_cols.sort_unstable();
        let zero_minor = minor(&combined_rows, &combined_cols, (e + p) as i64, hi);
        push(outcome_eq(&inner, &zero_minor), &mut outcome);
        push(CheckOutcome::from_series(&zero_minor), &mut outcome);
    }
    outcome.unwrap()
}

/// Monomial straightening: descending products of minors rewrite as signed
/// sums of ascending products,
///
/// ```text
/// t^[e]_J(u+e) t^[d]_I(u+d)
///   = sum_{Λ⊆J, |Λ|=e-d} (-1)^l(Λ|J∖Λ) t^[d]_{J∖Λ}(u+d) t^[e]_{Λ|I}(u+e)
/// ```
pub fn straightening_residual(i_set: &[u8], j_set: &[u8], hi: i64) -> CheckOutcome {
    let d = i_set.len();
    let e = j_set.len();
    assert!(d <= e);
    let rows_d: Vec<u8> = (1..=d as u8).collect();
    let rows_e: Vec<u8> = (1..=e as u8).collect();
    let lhs = minor(&rows_e, j_set, e as i64, hi).mul(&minor(&rows_d, i_set, d as i64, hi));
    let mut rhs = Series::zero(Window::order(hi));
    for (lam, comp, sign) in subset_shuffles(e, e - d) {
        let first = minor(&rows_d, &pick(j_set, &comp), d as i64, hi);
        let mut cols = pick(j_set, &lam);
        cols.extend_from_slice(i_set);
        let second = minor(&rows_e, &cols, e as i64, hi);
        let term = first.mul(&second);
        rhs = if sign > 0 { rhs.add(&term) } else { rhs.sub(&term) };
    }
    CheckOutcome::from_series(&lhs.sub(&rhs))
}

/// Rows-form vs columns-form of the determinant.
pub fn rows_cols_residual(rows: &[u8], cols: &[u8], hi: i64) -> CheckOutcome {
    let a = ydet_raw(rows, cols, DetVariant::Rows, hi);
    let b = ydet_raw(rows, cols, DetVariant::Cols, hi);
    CheckOutcome::from_series(&a.sub(&b))
}

/// Alternating property of the raw permutation sums: a misordered tuple
/// equals the signed sorted minor, and repeats vanish. Checked for both
/// variants.
pub fn alternating_residual(rows: &[u8], cols: &[u8], hi: i64) -> CheckOutcome {
    let (rs, sr) = IndexTuple::new(rows).sort_with_sign();
    let (cs, sc) = IndexTuple::new(cols).sort_with_sign();
    let mut outcome: Option<CheckOutcome> = None;
    for variant in [DetVariant::Rows, DetVariant::Cols] {
        let raw = ydet_raw(rows, cols, variant, hi);
        let expected = if sr == 0 || sc == 0 {
            Series::zero(Window::order(hi))
        } else {
            let base = ydet_raw(&rs.0, &cs.0, variant, hi);
            if sr * sc < 0 {
                base.neg()
            } else {
                base
            }
        };
        let here = CheckOutcome::from_series(&raw.sub(&expected));
        outcome = Some(match outcome {
            None => here,
            Some(o) => o.join(here),
        });
    }
    outcome.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bubble-sort inversion counter, kept independent of `sort_with_sign`.
    fn naive_inversions(word: &[u8]) -> Option<usize> {
        let mut v = word.to_vec();
        let mut count = 0;
        loop {
            let mut swapped = false;
            for i in 1..v.len() {
                if v[i - 1] > v[i] {
                    v.swap(i - 1, i);
                    count += 1;
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        if v.windows(2).any(|p| p[0] == p[1]) {
            None
        } else {
            Some(count)
        }
    }

    #[test]
    fn inversion_sign_examples() {
        // l(3,1,2) = 2 by the bubble oracle
        assert_eq!(naive_inversions(&[3, 1, 2]), Some(2));
        assert_eq!(inversion_sign(&[3], &[1, 2]), 1);
        assert_eq!(inversion_sign(&[1, 2], &[3]), 1);
        assert_eq!(inversion_sign(&[2], &[2, 3]), 0);
        for word in [&[2u8, 1, 3][..], &[3, 2, 1], &[1, 3, 2], &[4, 1, 3, 2]] {
            let expect = match naive_inversions(word) {
                None => 0,
                Some(c) if c % 2 == 0 => 1,
                Some(_) => -1,
            };
            assert_eq!(inversion_sign(word, &[]), expect, "word {word:?}");
        }
    }

    #[test]
    fn one_by_one_minor_is_generating_series() {
        let m = minor(&[1], &[1], 0, 3);
        let (eq, _, _) = m.eq_on_common(&gen_series(1, 1, 3));
        assert!(eq);
        // with a shift
        let m = minor(&[1], &[1], 2, 3);
        let (eq, _, _) = m.eq_on_common(&gen_series(1, 1, 3).shift(&rat_int(2)));
        assert!(eq);
    }

    #[test]
    fn two_by_two_minor_first_coefficient() {
        // coefficient of u^-1 in t^{12}_{12}(u) is t^(1)_{11} + t^(1)_{22}
        let m = minor(&[1, 2], &[1, 2], 0, 2);
        let expect = Element::generator(1, 1, 1).add(&Element::generator(1, 2, 2));
        assert_eq!(m.get(1), Some(&expect));
        assert_eq!(m.get(0), Some(&Element::one()));
    }

    #[test]
    fn repeated_row_gives_zero() {
        let m = minor(&[1, 1], &[1, 2], 0, 3);
        assert!(m.is_zero_on_window());
    }

    #[test]
    fn misordered_minor_is_signed() {
        let a = minor(&[2, 1], &[1, 2], 0, 3);
        let b = minor(&[1, 2], &[1, 2], 0, 3).neg();
        let (eq, _, _) = a.eq_on_common(&b);
        assert!(eq);
    }

    #[test]
    fn rows_and_cols_forms_agree_at_small_sizes() {
        let o = rows_cols_residual(&[1, 2], &[1, 2], 4);
        assert!(o.passed(), "{:?}", o.counterexample);
        let o = rows_cols_residual(&[1, 2], &[1, 3], 4);
        assert!(o.passed(), "{:?}", o.counterexample);
    }

    #[test]
    fn laplace_expansions_at_d2() {
        let o = laplace_row_residual(&[1, 2], &[1, 2], 1, 4);
        assert!(o.passed(), "{:?}", o.counterexample);
        let o = laplace_col_residual(&[1, 2], &[1, 2], 1, 4);
        assert!(o.passed(), "{:?}", o.counterexample);
    }

    #[test]
    fn commuting_minors_small() {
        let o = commuting_residual(&[1, 2], &[1, 2], &[1], &[1], 4);
        assert!(o.passed(), "{:?}", o.counterexample);
    }

    #[test]
    fn quasi_plucker_minor_examples() {
        // p_aa with empty K is 1
        let p = quasi_plucker_minor(1, 1, &[], 3).unwrap();
        let (eq, _, _) = p.eq_on_common(&Series::constant(Element::one(), 3));
        assert!(eq);
        // precondition violated: {3} ∪ {1} ≠ [2]
        assert_eq!(quasi_plucker_minor(3, 1, &[1], 3).unwrap_err(), Error::NonUnitConstantTerm);
        // well-formed: {2} ∪ {1} = [2]
        assert!(quasi_plucker_minor(2, 3, &[1], 3).is_ok());
    }

    #[test]
    fn defining_relation_cleared_series_vanishes() {
        let r = crate::series::defining_relation_series_residual(1, 2, 2, 1, 4);
        assert!(r.is_zero_on_window());
    }

    #[test]
    fn minor_commutator_specializes_to_defining_relation() {
        // d = e = 1 is the defining relation in series form
        let o = minor_commutator_residual(&[1], &[2], &[2], &[1], 4);
        assert!(o.passed(), "{:?}", o.counterexample);
    }
}
