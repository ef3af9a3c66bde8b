//! Skew-symmetric multiderivations, the Poisson differential `d_π`, and
//! graded dimensions of Poisson cohomology and zeroth Poisson homology.
//!
//! The cochain space of level `q` and internal degree `d` has basis
//! `m ∂_S` with `S` a `q`-subset of the variables (lexicographic) and `m`
//! a monomial of degree `d + Σ_{i∈S} w_i` (grevlex). `d_π` preserves the
//! internal degree, so everything is computed one degree slice at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use num_traits::One;

use crate::calculus::{self, Derivation};
use crate::error::{Error, Result};
use crate::linalg::LinearProblem;
use crate::poisson::PoissonStructure;
use crate::poly::{Homogeneity, Poly, WeightedGrading};
use crate::Rational;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Sign of the permutation sorting `idx`, or `None` if an index repeats.
fn sort_sign(idx: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            match v[j].cmp(&v[j + 1]) {
                std::cmp::Ordering::Greater => {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// A skew-symmetric `k`-derivation `Σ_S c_S ∂_S` of internal degree
/// `degree`; each nonzero `c_S` has weighted degree `degree + Σ_{i∈S} w_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewDerivation {
    grading: WeightedGrading,
    level: usize,
    coeffs: BTreeMap<Vec<usize>, Poly>,
    degree: i64,
}

impl SkewDerivation {
    pub fn zero(grading: &WeightedGrading, level: usize, degree: i64) -> Self {
        SkewDerivation {
            grading: grading.clone(),
            level,
            coeffs: BTreeMap::new(),
            degree,
        }
    }

    /// Validates subsets (strictly increasing, in range, of size `level`)
    /// and coefficient degrees. Zero coefficients are dropped.
    pub fn new<I>(grading: &WeightedGrading, level: usize, degree: i64, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Poly)>,
    {
        let n = grading.arity();
        if level > n {
            return Err(Error::LevelOutOfRange { level, max: n });
        }
        let mut out = Self::zero(grading, level, degree);
        for (s, c) in coeffs {
            if s.len() != level || s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Document(format!(
                    "invalid index set {s:?} at level {level}"
                )));
            }
            if let Some(&bad) = s.iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    arity: n,
                });
            }
            if c.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: c.arity(),
                });
            }
            let expected = degree + s.iter().map(|&i| grading.weight(i)).sum::<i64>();
            let h = c.weighted_degree(grading);
            if !h.admits(expected) {
                return Err(Error::WrongDegree {
                    expected,
                    found: h.to_string(),
                });
            }
            if !c.is_zero() {
                out.coeffs.insert(s, c);
            }
        }
        Ok(out)
    }

    /// A polynomial as a level-0 element.
    pub fn from_poly(grading: &WeightedGrading, a: &Poly) -> Result<Self> {
        let degree = match a.weighted_degree(grading) {
            Homogeneity::Zero => 0,
            Homogeneity::Degree(d) => d,
            Homogeneity::NonHomogeneous => return Err(Error::NotHomogeneous(a.to_string())),
        };
        Self::new(grading, 0, degree, [(Vec::new(), a.clone())])
    }

    pub fn from_derivation(delta: &Derivation) -> Self {
        SkewDerivation {
            grading: delta.grading().clone(),
            level: 1,
            coeffs: delta
                .images()
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(i, p)| (vec![i], p.clone()))
                .collect(),
            degree: delta.degree(),
        }
    }

    /// Level-two element from coefficients listed in pair order
    /// `(0,1), (0,2), …, (n-2,n-1)`.
    pub(crate) fn from_pairs(grading: &WeightedGrading, degree: i64, pairs: Vec<Poly>) -> Self {
        let n = grading.arity();
        let coeffs = subsets(n, 2)
            .into_iter()
            .zip(pairs)
            .filter(|(_, p)| !p.is_zero())
            .collect();
        SkewDerivation {
            grading: grading.clone(),
            level: 2,
            coeffs,
            degree,
        }
    }

    /// The level-one element as a derivation.
    pub fn to_derivation(&self) -> Result<Derivation> {
        if self.level != 1 {
            return Err(Error::LevelOutOfRange {
                level: self.level,
                max: 1,
            });
        }
        let n = self.arity();
        let images = (0..n).map(|i| self.coefficient(&[i])).collect();
        Derivation::new(self.grading.clone(), images, self.degree)
    }

    pub fn grading(&self) -> &WeightedGrading {
        &self.grading
    }

    pub fn arity(&self) -> usize {
        self.grading.arity()
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.coeffs.iter()
    }

    /// Coefficient on `∂_S` for an increasing index set `S`.
    pub fn coefficient(&self, s: &[usize]) -> Poly {
        self.coeffs
            .get(s)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.arity()))
    }

    /// `Q[x_{i_1}, …, x_{i_k}]` for any index tuple.
    pub fn on_generators(&self, idx: &[usize]) -> Poly {
        match sort_sign(idx) {
            Some((sorted, sign)) => {
                let c = self.coefficient(&sorted);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
            None => Poly::zero(self.arity()),
        }
    }

    /// `Q[f_1, …, f_k] = Σ_S c_S det(∂f_t/∂x_{s_u})`.
    pub fn eval(&self, args: &[Poly]) -> Result<Poly> {
        if args.len() != self.level {
            return Err(Error::ArgumentCount {
                expected: self.level,
                found: args.len(),
            });
        }
        let n = self.arity();
        for a in args {
            if a.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: a.arity(),
                });
            }
        }
        if self.level == 0 {
            return Ok(self.coefficient(&[]));
        }
        let jac: Vec<Vec<Poly>> = args
            .iter()
            .map(|f| (0..n).map(|i| f.d(i)).collect())
            .collect();
        let mut out = Poly::zero(n);
        for (s, c) in &self.coeffs {
            let det = determinant(&jac, s, n);
            if !det.is_zero() {
                out = &out + &(&det * c);
            }
        }
        Ok(out)
    }

    /// Shuffle product `P ∧ Q` of levels `p` and `q`. The result is the zero
    /// element of level `p + q` when `p + q` exceeds the arity.
    pub fn wedge(&self, other: &SkewDerivation) -> Result<SkewDerivation> {
        if self.grading != other.grading {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        let level = self.level + other.level;
        let degree = self.degree + other.degree;
        let mut coeffs: BTreeMap<Vec<usize>, Poly> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let joined: Vec<usize> = a.iter().chain(b).copied().collect();
                let Some((sorted, sign)) = sort_sign(&joined) else {
                    continue;
                };
                let term = (ca * cb).scale_int(sign);
                let entry = coeffs
                    .entry(sorted)
                    .or_insert_with(|| Poly::zero(self.arity()));
                *entry = &*entry + &term;
            }
        }
        coeffs.retain(|_, p| !p.is_zero());
        Ok(SkewDerivation {
            grading: self.grading.clone(),
            level,
            coeffs,
            degree,
        })
    }

    pub fn add(&self, other: &SkewDerivation) -> Result<SkewDerivation> {
        if self.grading != other.grading || self.level != other.level {
            return Err(Error::ArityMismatch {
                expected: self.level,
                found: other.level,
            });
        }
        let mut coeffs = self.coeffs.clone();
        for (s, c) in &other.coeffs {
            let entry = coeffs
                .entry(s.clone())
                .or_insert_with(|| Poly::zero(self.arity()));
            *entry = &*entry + c;
        }
        coeffs.retain(|_, p| !p.is_zero());
        let degree = if self.is_zero() {
            other.degree
        } else {
            self.degree
        };
        Ok(SkewDerivation {
            grading: self.grading.clone(),
            level: self.level,
            coeffs,
            degree,
        })
    }

    pub fn scale(&self, c: &Rational) -> SkewDerivation {
        let mut out = self.clone();
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(s, p)| (s.clone(), p.scale(c)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        out
    }
}

impl fmt::Debug for SkewDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SkewDerivation(level {}, degree {}; ",
            self.level, self.degree
        )?;
        for (k, (s, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let idx: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "d{}: {c}", idx.join(""))?;
        }
        f.write_str(")")
    }
}

/// `det(jac[t][s_u])` by expansion along the first row.
fn determinant(jac: &[Vec<Poly>], cols: &[usize], n: usize) -> Poly {
    fn rec(jac: &[Vec<Poly>], row: usize, cols: &[usize], n: usize) -> Poly {
        if cols.is_empty() {
            return Poly::one(n);
        }
        let mut out = Poly::zero(n);
        for (u, &c) in cols.iter().enumerate() {
            let entry = &jac[row][c];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|&(v, _)| v != u)
                .map(|(_, &c)| c)
                .collect();
            let minor = rec(jac, row + 1, &rest, n);
            if minor.is_zero() {
                continue;
            }
            let term = entry * &minor;
            out = if u % 2 == 0 {
                &out + &term
            } else {
                &out - &term
            };
        }
        out
    }
    rec(jac, 0, cols, n)
}

/// `Q[f, x_{r_1}, …, x_{r_m}]`, expanding only the first slot.
fn eval_first_slot(q: &SkewDerivation, f: &Poly, rest: &[usize]) -> Poly {
    let n = q.arity();
    let mut out = Poly::zero(n);
    let mut idx = Vec::with_capacity(rest.len() + 1);
    for s in 0..n {
        if rest.contains(&s) {
            continue;
        }
        let ds = f.d(s);
        if ds.is_zero() {
            continue;
        }
        idx.clear();
        idx.push(s);
        idx.extend_from_slice(rest);
        let c = q.on_generators(&idx);
        if !c.is_zero() {
            out = &out + &(&ds * &c);
        }
    }
    out
}

/// The Poisson differential on generator tuples:
///
/// `d_π Q[F_0..F_q] = Σ_i (−1)^i {F_i, Q[..F̂_i..]}
///                  + Σ_{i<j} (−1)^{i+j} Q[{F_i,F_j}, ..F̂_i..F̂_j..]`.
///
/// Level-`n` input gives the zero element of level `n + 1`.
pub fn d_pi(s: &PoissonStructure, q: &SkewDerivation) -> Result<SkewDerivation> {
    if s.grading() != q.grading() {
        return Err(Error::ArityMismatch {
            expected: s.arity(),
            found: q.arity(),
        });
    }
    let n = s.arity();
    let level = q.level() + 1;
    let mut coeffs = Vec::new();
    for t in subsets(n, level) {
        let mut val = Poly::zero(n);
        for i in 0..level {
            let rest: Vec<usize> = t
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &v)| v)
                .collect();
            let inner = q.on_generators(&rest);
            if inner.is_zero() {
                continue;
            }
            let b = s.bracket_with_var(t[i], &inner);
            val = if i % 2 == 0 { &val + &b } else { &val - &b };
        }
        for i in 0..level {
            for j in i + 1..level {
                let p = s.bracket(t[i], t[j]);
                if p.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &v)| v)
                    .collect();
                let term = eval_first_slot(q, &p, &rest);
                val = if (i + j) % 2 == 0 {
                    &val + &term
                } else {
                    &val - &term
                };
            }
        }
        if !val.is_zero() {
            coeffs.push((t, val));
        }
    }
    Ok(SkewDerivation {
        grading: q.grading().clone(),
        level,
        coeffs: coeffs.into_iter().collect(),
        degree: q.degree(),
    })
}

/// Basis of the level-`q`, degree-`d` cochains.
pub fn cochain_basis(g: &WeightedGrading, q: usize, d: i64) -> Result<Vec<SkewDerivation>> {
    g.require_positive()?;
    let n = g.arity();
    let mut out = Vec::new();
    for s in subsets(n, q) {
        let shift: i64 = s.iter().map(|&i| g.weight(i)).sum();
        for m in g.monomial_basis(d + shift)? {
            let mut coeffs = BTreeMap::new();
            coeffs.insert(s.clone(), Poly::monomial(n, m, Rational::one()));
            out.push(SkewDerivation {
                grading: g.clone(),
                level: q,
                coeffs,
                degree: d,
            });
        }
    }
    Ok(out)
}

/// `dim 𝔛^q_d`.
pub fn cochain_dim(g: &WeightedGrading, q: usize, d: i64) -> Result<usize> {
    let mut total = 0;
    for s in subsets(g.arity(), q) {
        let shift: i64 = s.iter().map(|&i| g.weight(i)).sum();
        total += g.dim(d + shift)?;
    }
    Ok(total)
}

/// Degree-sliced cochain complex of a graded Poisson structure with
/// memoized ranks of `d_π`.
pub struct PoissonComplex<'a> {
    s: &'a PoissonStructure,
    ranks: Mutex<BTreeMap<(usize, i64), usize>>,
}

impl<'a> PoissonComplex<'a> {
    /// Requires positive weights and a graded Poisson structure.
    pub fn new(s: &'a PoissonStructure) -> Result<Self> {
        s.grading().require_positive()?;
        s.require_graded()?;
        s.require_poisson()?;
        Ok(PoissonComplex {
            s,
            ranks: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn structure(&self) -> &PoissonStructure {
        self.s
    }

    /// Lowest internal degree at which some cochain can be nonzero.
    pub fn min_degree(&self) -> i64 {
        -self.s.grading().total()
    }

    pub fn cochain_dim(&self, q: usize, d: i64) -> usize {
        cochain_dim(self.s.grading(), q, d).expect("weights checked")
    }

    /// Matrix of `d_π^q` on the degree-`d` slice.
    pub fn differential(&self, q: usize, d: i64) -> LinearProblem {
        let basis = cochain_basis(self.s.grading(), q, d).expect("weights checked");
        let targets = subsets(self.s.arity(), q + 1);
        let images: Vec<Vec<Poly>> = basis
            .iter()
            .map(|b| {
                let img = d_pi(self.s, b).expect("same ring");
                targets.iter().map(|t| img.coefficient(t)).collect()
            })
            .collect();
        LinearProblem::from_images(&images)
    }

    /// `rank d_π^q` on the degree-`d` slice.
    pub fn rank(&self, q: usize, d: i64) -> usize {
        if q >= self.s.arity() || self.cochain_dim(q, d) == 0 {
            return 0;
        }
        if let Some(&r) = self.ranks.lock().expect("poisoned").get(&(q, d)) {
            return r;
        }
        let r = self.differential(q, d).rank();
        self.ranks.lock().expect("poisoned").insert((q, d), r);
        r
    }

    /// `dim PH^q_d = dim ker d_π^q − rank d_π^{q−1}` on the slice.
    pub fn ph(&self, q: usize, d: i64) -> Result<usize> {
        let n = self.s.arity();
        if q > n {
            return Err(Error::LevelOutOfRange { level: q, max: n });
        }
        let kernel = self.cochain_dim(q, d) - self.rank(q, d);
        let incoming = if q == 0 { 0 } else { self.rank(q - 1, d) };
        Ok(kernel - incoming)
    }

    /// Fills the rank memo for every level and every degree in
    /// `[dmin, dmax]`, one thread per degree slice.
    pub fn precompute(&self, dmin: i64, dmax: i64) {
        let n = self.s.arity();
        std::thread::scope(|scope| {
            for d in dmin..=dmax {
                scope.spawn(move || {
                    for q in 0..n {
                        self.rank(q, d);
                    }
                });
            }
        });
    }

    /// `Σ_q (−1)^q dim PH^q_d`.
    pub fn alternating_ph(&self, d: i64) -> i64 {
        (0..=self.s.arity())
            .map(|q| sign(q) * self.ph(q, d).expect("level in range") as i64)
            .sum()
    }

    /// `Σ_q (−1)^q dim 𝔛^q_d`.
    pub fn alternating_cochains(&self, d: i64) -> i64 {
        (0..=self.s.arity())
            .map(|q| sign(q) * self.cochain_dim(q, d) as i64)
            .sum()
    }

    /// The alternating sum of cohomology equals that of the cochains; for
    /// three variables of weight one it is also `−1` at `d = −3` and `0`
    /// elsewhere.
    pub fn euler_check(&self, d: i64) -> bool {
        let alt = self.alternating_ph(d);
        let mut ok = alt == self.alternating_cochains(d);
        if is_standard_three(self.s.grading()) {
            ok &= alt == if d == -3 { -1 } else { 0 };
        }
        ok
    }
}

fn sign(q: usize) -> i64 {
    if q % 2 == 0 {
        1
    } else {
        -1
    }
}

fn is_standard_three(g: &WeightedGrading) -> bool {
    g.arity() == 3 && g.is_standard()
}

/// `dim PH^q_d` for a single slice.
pub fn ph_dims(s: &PoissonStructure, q: usize, d: i64) -> Result<usize> {
    PoissonComplex::new(s)?.ph(q, d)
}

/// `dim A_d − dim (Σ_i H_{x_i}(A))_d`.
pub fn ph0_homology_dims(s: &PoissonStructure, d: i64) -> Result<usize> {
    let g = s.grading();
    g.require_positive()?;
    s.require_graded()?;
    if d < 0 {
        return Ok(0);
    }
    let n = s.arity();
    let mut images = Vec::new();
    for i in 0..n {
        for m in g.monomial_basis(d - g.weight(i))? {
            let mono = Poly::monomial(n, m, Rational::one());
            images.push(vec![s.bracket_with_var(i, &mono)]);
        }
    }
    let rank = LinearProblem::from_images(&images).rank();
    Ok(g.dim(d)? - rank)
}

pub fn euler_check(s: &PoissonStructure, d: i64) -> Result<bool> {
    Ok(PoissonComplex::new(s)?.euler_check(d))
}

fn require_poincare(s: &PoissonStructure) -> Result<()> {
    if !is_standard_three(s.grading()) {
        return Err(Error::NotQuadraticThreeVariable("Poincaré duality check"));
    }
    if !calculus::is_unimodular(s)? {
        return Err(Error::NotUnimodular);
    }
    Ok(())
}

/// `dim PH^3_d == dim PH_0,(d+3)`; three variables of weight one and a
/// unimodular structure only.
pub fn poincare_check(s: &PoissonStructure, d: i64) -> Result<bool> {
    require_poincare(s)?;
    Ok(ph_dims(s, 3, d)? == ph0_homology_dims(s, d + 3)?)
}

/// Cohomology and homology dimensions over a degree window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyWindow {
    pub dmin: i64,
    pub dmax: i64,
    /// `ph[q]` maps degree to `dim PH^q_d`.
    pub ph: Vec<BTreeMap<i64, usize>>,
    pub ph0_homology: BTreeMap<i64, usize>,
    pub euler: BTreeMap<i64, bool>,
    /// Absent when duality does not apply to the structure.
    pub poincare: Option<BTreeMap<i64, bool>>,
}

/// Computes every `PH^q_d` for `d ∈ [−Σw, max_degree]`, `PH_0` on
/// `[0, max_degree]`, and the Euler and (where applicable) Poincaré checks.
pub fn cohomology_window(s: &PoissonStructure, max_degree: i64) -> Result<CohomologyWindow> {
    let complex = PoissonComplex::new(s)?;
    let dmin = complex.min_degree();
    let dmax = max_degree.max(dmin);
    complex.precompute(dmin, dmax);
    let n = s.arity();
    let mut ph = vec![BTreeMap::new(); n + 1];
    let mut euler = BTreeMap::new();
    for d in dmin..=dmax {
        for (q, slot) in ph.iter_mut().enumerate() {
            slot.insert(d, complex.ph(q, d)?);
        }
        euler.insert(d, complex.euler_check(d));
    }
    let mut ph0_homology = BTreeMap::new();
    for d in 0..=dmax + s.grading().total() {
        ph0_homology.insert(d, ph0_homology_dims(s, d)?);
    }
    let poincare = if require_poincare(s).is_ok() {
        Some(
            (dmin..=dmax)
                .map(|d| (d, ph[3][&d] == ph0_homology[&(d + 3)]))
                .collect(),
        )
    } else {
        None
    };
    ph0_homology.retain(|&d, _| d <= dmax);
    Ok(CohomologyWindow {
        dmin,
        dmax,
        ph,
        ph0_homology,
        euler,
        poincare,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn g2() -> WeightedGrading {
        WeightedGrading::standard(2)
    }

    fn g3() -> WeightedGrading {
        WeightedGrading::standard(3)
    }

    fn p2(s: &str) -> Poly {
        Poly::parse(s, 2).unwrap()
    }

    fn p3(s: &str) -> Poly {
        Poly::parse(s, 3).unwrap()
    }

    fn cusp() -> PoissonStructure {
        PoissonStructure::from_potential(&p3("x^3 + y^2*z"), g3()).unwrap()
    }

    fn hesse0() -> PoissonStructure {
        PoissonStructure::from_potential(&p3("1/3*x^3 + 1/3*y^3 + 1/3*z^3"), g3()).unwrap()
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn evaluation_on_basis_pairing() {
        let q = SkewDerivation::new(&g2(), 2, -2, [(vec![0, 1], Poly::one(2))]).unwrap();
        assert_eq!(q.eval(&[p2("x"), p2("y")]).unwrap(), Poly::one(2));
        assert_eq!(q.eval(&[p2("y"), p2("x")]).unwrap(), -Poly::one(2));
        assert_eq!(q.eval(&[p2("x^2"), p2("y")]).unwrap(), p2("2*x"));
        assert!(matches!(
            q.eval(&[p2("x")]),
            Err(Error::ArgumentCount {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn wedges() {
        let e = Derivation::euler(&g2()).to_skew();
        assert!(e.wedge(&e).unwrap().is_zero());
        let f = Derivation::infer(g2(), vec![p2("0"), p2("-x")])
            .unwrap()
            .to_skew();
        let w = e.wedge(&f).unwrap();
        assert_eq!(w.coefficient(&[0, 1]), p2("-x^2"));
        assert_eq!(w, calculus::wedge_with_euler(&f.to_derivation().unwrap()));
        let s = PoissonStructure::new(g2(), [((0, 1), p2("x^2"))]).unwrap();
        let phi = Derivation::infer(g2(), vec![p2("-x"), p2("y - x")]).unwrap();
        let d = calculus::d_pi1(&s, &phi).unwrap();
        let w3 = e.wedge(&d).unwrap();
        assert_eq!(w3.level(), 3);
        assert!(w3.is_zero());
    }

    #[test]
    fn wedge_matches_triple_formula() {
        let c = cusp();
        let d = Derivation::infer(g3(), vec![p3("y"), p3("z"), p3("x")]).unwrap();
        let dd = calculus::d_pi1(&c, &d).unwrap();
        let e = Derivation::euler(&g3()).to_skew();
        let w = e.wedge(&dd).unwrap();
        let pairs: Vec<Poly> = subsets(3, 2).iter().map(|s| dd.coefficient(s)).collect();
        let direct = calculus::euler_wedge_triples(&g3(), &pairs);
        assert_eq!(w.coefficient(&[0, 1, 2]), direct[0]);
    }

    #[test]
    fn differential_low_levels() {
        let h = hesse0();
        let omega = p3("1/3*x^3 + 1/3*y^3 + 1/3*z^3");
        let q0 = SkewDerivation::from_poly(&g3(), &omega).unwrap();
        assert!(d_pi(&h, &q0).unwrap().is_zero());
        let a = SkewDerivation::from_poly(&g3(), &p3("x*y")).unwrap();
        let da = d_pi(&h, &a).unwrap();
        for i in 0..3 {
            assert_eq!(da.coefficient(&[i]), h.bracket_with_var(i, &p3("x*y")));
        }
        let e = Derivation::euler(&g3()).to_skew();
        assert!(d_pi(&h, &e).unwrap().is_zero());
    }

    #[test]
    fn level_one_differential_matches_calculus() {
        let c = cusp();
        let d = Derivation::infer(g3(), vec![p3("x^2 + y*z"), p3("x*z"), p3("y^2")]).unwrap();
        assert_eq!(
            d_pi(&c, &d.to_skew()).unwrap(),
            calculus::d_pi1(&c, &d).unwrap()
        );
    }

    #[test]
    fn square_of_differential_vanishes() {
        let c = cusp();
        for q in 0..3 {
            for d in -2..3 {
                for b in cochain_basis(&g3(), q, d).unwrap() {
                    let dd = d_pi(&c, &d_pi(&c, &b).unwrap()).unwrap();
                    assert!(dd.is_zero(), "q={q} d={d} {b:?}");
                }
            }
        }
    }

    #[test]
    fn hesse_lowest_degrees() {
        let h = hesse0();
        let cx = PoissonComplex::new(&h).unwrap();
        assert_eq!(cx.ph(3, -3).unwrap(), 1);
        assert_eq!(cx.ph(2, -2).unwrap(), 3);
        let ph0: Vec<usize> = (0..7).map(|d| cx.ph(0, d).unwrap()).collect();
        assert_eq!(ph0, vec![1, 0, 0, 1, 0, 0, 1]);
        assert!(cx.euler_check(-3));
        assert_eq!(cx.alternating_ph(-3), -1);
        assert_eq!(cx.alternating_ph(0), 0);
        assert!(matches!(cx.ph(4, 0), Err(Error::LevelOutOfRange { .. })));
    }

    #[test]
    fn homology_of_cusp() {
        let c = cusp();
        let dims: Vec<usize> = (0..7).map(|d| ph0_homology_dims(&c, d).unwrap()).collect();
        assert_eq!(dims, vec![1, 3, 3, 2, 3, 3, 2]);
        let t = PoissonStructure::trivial(g3());
        for d in 0..5 {
            assert_eq!(ph0_homology_dims(&t, d).unwrap(), g3().dim(d).unwrap());
        }
    }

    #[test]
    fn duality_checks() {
        let c = cusp();
        assert!(poincare_check(&c, -3).unwrap());
        assert!(poincare_check(&c, -2).unwrap());
        assert!(poincare_check(&hesse0(), 0).unwrap());
        let r = PoissonStructure::verified(g3(), [((0, 1), p3("x^2"))]).unwrap();
        assert_eq!(poincare_check(&r, 0), Err(Error::NotUnimodular));
        let w = WeightedGrading::new(vec![1, 2, 3]);
        let sextic = PoissonStructure::from_potential(&p3("x^6 + y^3 + z^2"), w).unwrap();
        assert!(matches!(
            poincare_check(&sextic, 0),
            Err(Error::NotQuadraticThreeVariable(_))
        ));
    }

    #[test]
    fn scaling_keeps_dimensions() {
        let c = cusp();
        let s = c.scale(&rat(-3, 1)).unwrap();
        let a = PoissonComplex::new(&c).unwrap();
        let b = PoissonComplex::new(&s).unwrap();
        for q in 0..4 {
            for d in -3..3 {
                assert_eq!(a.ph(q, d).unwrap(), b.ph(q, d).unwrap());
            }
        }
    }

    #[test]
    fn window_report() {
        let w = cohomology_window(&cusp(), 3).unwrap();
        assert_eq!(w.dmin, -3);
        assert_eq!(w.ph[3][&-3], 1);
        assert!(w.euler.values().all(|&b| b));
        assert!(w.poincare.as_ref().unwrap().values().all(|&b| b));
        assert_eq!(
            w.ph0_homology.keys().copied().collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn non_poisson_input_is_rejected() {
        let bad = PoissonStructure::new(g3(), [((0, 1), p3("y^2")), ((1, 2), p3("x^2"))]).unwrap();
        assert_eq!(bad.jacobiator(0, 1, 2).unwrap(), p3("-2*x^2*y"));
        assert!(matches!(
            PoissonComplex::new(&bad),
            Err(Error::NotPoisson(..))
        ));
    }
}
