//! Poisson structures given by their brackets on generators.

use crate::error::{Error, Result};
use crate::poly::{Homogeneity, Poly, WeightedGrading};
use crate::Rational;
use num_traits::Zero;

/// Bracket matrix `P_ij = {x_i, x_j}` over a fixed grading.
///
/// Only the entries with `i < j` are stored; the diagonal is zero and the
/// lower triangle is the negated transpose.
#[derive(Debug, Clone)]
pub struct PoissonStructure {
    grading: WeightedGrading,
    upper: Vec<Poly>,
    verified_graded: bool,
    verified_jacobi: bool,
}

// Equality compares the brackets only, not the cached verdicts.
impl PartialEq for PoissonStructure {
    fn eq(&self, other: &Self) -> bool {
        self.grading == other.grading && self.upper == other.upper
    }
}

impl Eq for PoissonStructure {}

/// Position of the pair `(i, j)`, `i < j`, in row-major upper-triangular
/// storage.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl PoissonStructure {
    /// The zero bracket.
    pub fn trivial(grading: WeightedGrading) -> Self {
        let n = grading.arity();
        PoissonStructure {
            upper: vec![Poly::zero(n); n * n.saturating_sub(1) / 2],
            grading,
            verified_graded: false,
            verified_jacobi: false,
        }
    }

    /// Builds a structure from `((i, j), P_ij)` entries with `i != j`
    /// (0-based). An entry with `i > j` sets `P_ji = -P_ij`. Missing pairs
    /// are zero. No axiom is checked here.
    pub fn new<I>(grading: WeightedGrading, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Poly)>,
    {
        let mut s = Self::trivial(grading);
        for ((i, j), p) in entries {
            s.set(i, j, p)?;
        }
        Ok(s)
    }

    /// Builds the structure and checks that it is graded and Poisson.
    pub fn verified<I>(grading: WeightedGrading, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Poly)>,
    {
        Self::new(grading, entries)?.into_verified()
    }

    fn set(&mut self, i: usize, j: usize, p: Poly) -> Result<()> {
        let n = self.arity();
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    arity: n,
                });
            }
        }
        if p.arity() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: p.arity(),
            });
        }
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[pair_index(n, i, j)] = p,
            std::cmp::Ordering::Greater => self.upper[pair_index(n, j, i)] = -p,
            std::cmp::Ordering::Equal if p.is_zero() => {}
            std::cmp::Ordering::Equal => {
                return Err(Error::Document(format!(
                    "diagonal bracket {{x{0},x{0}}} must be zero",
                    i + 1
                )))
            }
        }
        self.verified_graded = false;
        self.verified_jacobi = false;
        Ok(())
    }

    pub fn grading(&self) -> &WeightedGrading {
        &self.grading
    }

    pub fn arity(&self) -> usize {
        self.grading.arity()
    }

    /// `P_ij` for any pair, with antisymmetry applied.
    pub fn bracket(&self, i: usize, j: usize) -> Poly {
        let n = self.arity();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.upper[pair_index(n, j, i)],
            std::cmp::Ordering::Equal => Poly::zero(n),
        }
    }

    /// Borrowed `P_ij` for `i < j`.
    pub fn upper(&self, i: usize, j: usize) -> &Poly {
        &self.upper[pair_index(self.arity(), i, j)]
    }

    /// Iterates `((i, j), P_ij)` over `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Poly)> {
        let n = self.arity();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .zip(self.upper.iter())
    }

    pub fn is_trivial(&self) -> bool {
        self.upper.iter().all(Poly::is_zero)
    }

    /// `{f, g} = Σ_{i<j} (∂_i f ∂_j g − ∂_j f ∂_i g) P_ij`.
    pub fn bracket_eval(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        let n = self.arity();
        for p in [f, g] {
            if p.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: p.arity(),
                });
            }
        }
        let df: Vec<Poly> = (0..n).map(|i| f.d(i)).collect();
        let dg: Vec<Poly> = (0..n).map(|i| g.d(i)).collect();
        let mut out = Poly::zero(n);
        for ((i, j), p) in self.entries() {
            if p.is_zero() {
                continue;
            }
            let w = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
            if !w.is_zero() {
                out = &out + &(&w * p);
            }
        }
        Ok(out)
    }

    /// `{x_i, f}`, computed directly as `Σ_j P_ij ∂_j f`.
    pub fn bracket_with_var(&self, i: usize, f: &Poly) -> Poly {
        let n = self.arity();
        let mut out = Poly::zero(n);
        for j in 0..n {
            if j == i {
                continue;
            }
            let dj = f.d(j);
            if dj.is_zero() {
                continue;
            }
            let p = self.bracket(i, j);
            if !p.is_zero() {
                out = &out + &(&p * &dj);
            }
        }
        out
    }

    /// `{x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}}`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Result<Poly> {
        let n = self.arity();
        for idx in [i, j, k] {
            if idx >= n {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    arity: n,
                });
            }
        }
        let a = self.bracket_with_var(i, &self.bracket(j, k));
        let b = self.bracket_with_var(j, &self.bracket(k, i));
        let c = self.bracket_with_var(k, &self.bracket(i, j));
        Ok(&(&a + &b) + &c)
    }

    /// First generator triple `(i, j, k)` where the Jacobi identity fails.
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.arity();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobiator(i, j, k).expect("in range").is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn verify_poisson(&self) -> bool {
        self.verified_jacobi || self.jacobi_failure().is_none()
    }

    /// First pair whose bracket is not homogeneous of degree `w_i + w_j`.
    pub fn grading_failure(&self) -> Option<Error> {
        for ((i, j), p) in self.entries() {
            let expected = self.grading.weight(i) + self.grading.weight(j);
            if !p.weighted_degree(&self.grading).admits(expected) {
                return Some(Error::NotGraded {
                    i,
                    j,
                    bracket: p.to_string(),
                    expected,
                });
            }
        }
        None
    }

    pub fn verify_graded(&self) -> bool {
        self.verified_graded || self.grading_failure().is_none()
    }

    pub fn require_graded(&self) -> Result<()> {
        if self.verified_graded {
            return Ok(());
        }
        match self.grading_failure() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    pub fn require_poisson(&self) -> Result<()> {
        if self.verified_jacobi {
            return Ok(());
        }
        match self.jacobi_failure() {
            Some((i, j, k)) => Err(Error::NotPoisson(i, j, k)),
            None => Ok(()),
        }
    }

    /// Checks gradedness and the Jacobi identity and records both verdicts.
    pub fn into_verified(mut self) -> Result<Self> {
        self.require_graded()?;
        self.require_poisson()?;
        self.verified_graded = true;
        self.verified_jacobi = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified_graded && self.verified_jacobi
    }

    /// Jacobian structure of a potential on three variables:
    /// `P_12 = ∂_3 Ω`, `P_13 = −∂_2 Ω`, `P_23 = ∂_1 Ω`.
    pub fn from_potential(omega: &Poly, grading: WeightedGrading) -> Result<Self> {
        if grading.arity() != 3 {
            return Err(Error::ArityMismatch {
                expected: 3,
                found: grading.arity(),
            });
        }
        if omega.arity() != 3 {
            return Err(Error::ArityMismatch {
                expected: 3,
                found: omega.arity(),
            });
        }
        let total = grading.total();
        let h = omega.weighted_degree(&grading);
        if !h.admits(total) {
            return Err(Error::WrongDegree {
                expected: total,
                found: match h {
                    Homogeneity::Degree(d) => format!("degree {d}"),
                    other => other.to_string(),
                },
            });
        }
        let mut s = Self::new(
            grading,
            [
                ((0, 1), omega.d(2)),
                ((0, 2), -omega.d(1)),
                ((1, 2), omega.d(0)),
            ],
        )?;
        // Every Jacobian bracket is Poisson, and the degree condition on Ω
        // makes it graded.
        s.verified_graded = true;
        s.verified_jacobi = true;
        Ok(s)
    }

    /// Multiplies every bracket by `xi`.
    pub fn scale(&self, xi: &Rational) -> Result<Self> {
        if xi.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(PoissonStructure {
            grading: self.grading.clone(),
            upper: self.upper.iter().map(|p| p.scale(xi)).collect(),
            verified_graded: self.verified_graded,
            verified_jacobi: self.verified_jacobi,
        })
    }

    pub(crate) fn mark_verified(mut self) -> Self {
        self.verified_graded = true;
        self.verified_jacobi = true;
        self
    }
}
