//! Derivations of a graded polynomial ring and the constructions built on
//! them: Euler, Hamiltonian and modular derivations, divergence, the
//! semi-Poisson condition and graded twists.

use std::fmt;

use num_traits::Zero;

use crate::cohomology::SkewDerivation;
use crate::error::{Error, Result};
use crate::poisson::PoissonStructure;
use crate::poly::{Homogeneity, Poly, WeightedGrading};
use crate::Rational;

/// A derivation of internal degree `degree`, given by its values on the
/// generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    grading: WeightedGrading,
    images: Vec<Poly>,
    degree: i64,
}

impl Derivation {
    /// Checks that each nonzero image `δ(x_i)` is homogeneous of degree
    /// `degree + w_i`.
    pub fn new(grading: WeightedGrading, images: Vec<Poly>, degree: i64) -> Result<Self> {
        let n = grading.arity();
        if images.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: images.len(),
            });
        }
        for (i, img) in images.iter().enumerate() {
            if img.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: img.arity(),
                });
            }
            let expected = degree + grading.weight(i);
            let h = img.weighted_degree(&grading);
            if !h.admits(expected) {
                return Err(Error::WrongDegree {
                    expected,
                    found: format!("{h} for the image of x{}", i + 1),
                });
            }
        }
        Ok(Derivation {
            grading,
            images,
            degree,
        })
    }

    /// Like [`Derivation::new`], reading the degree off the first nonzero
    /// image. The zero derivation gets degree 0.
    pub fn infer(grading: WeightedGrading, images: Vec<Poly>) -> Result<Self> {
        let mut degree = 0;
        for (i, img) in images.iter().enumerate() {
            match img.weighted_degree(&grading) {
                Homogeneity::Zero => continue,
                Homogeneity::Degree(d) => {
                    degree = d - grading.weights().get(i).copied().unwrap_or(0);
                    break;
                }
                Homogeneity::NonHomogeneous => {
                    return Err(Error::NotHomogeneous(format!("image of x{}: {img}", i + 1)))
                }
            }
        }
        Self::new(grading, images, degree)
    }

    pub(crate) fn from_parts(grading: WeightedGrading, images: Vec<Poly>, degree: i64) -> Self {
        debug_assert!(Self::new(grading.clone(), images.clone(), degree).is_ok());
        Derivation {
            grading,
            images,
            degree,
        }
    }

    pub fn zero(grading: WeightedGrading, degree: i64) -> Self {
        let n = grading.arity();
        Derivation {
            grading,
            images: vec![Poly::zero(n); n],
            degree,
        }
    }

    /// `E(x_i) = w_i x_i`.
    pub fn euler(grading: &WeightedGrading) -> Self {
        let n = grading.arity();
        let images = (0..n)
            .map(|i| Poly::var(n, i).scale_int(grading.weight(i)))
            .collect();
        Derivation {
            grading: grading.clone(),
            images,
            degree: 0,
        }
    }

    /// `H_a = {a, -}`, of degree `|a|`.
    pub fn hamiltonian(s: &PoissonStructure, a: &Poly) -> Result<Self> {
        let g = s.grading();
        if a.arity() != g.arity() {
            return Err(Error::ArityMismatch {
                expected: g.arity(),
                found: a.arity(),
            });
        }
        let degree = match a.weighted_degree(g) {
            Homogeneity::Zero => 0,
            Homogeneity::Degree(d) => d,
            Homogeneity::NonHomogeneous => return Err(Error::NotHomogeneous(a.to_string())),
        };
        let images = (0..g.arity()).map(|i| -s.bracket_with_var(i, a)).collect();
        Self::new(g.clone(), images, degree)
    }

    /// `𝐦(x_i) = −Σ_k ∂P_ik/∂x_k`, a degree-0 derivation.
    pub fn modular(s: &PoissonStructure) -> Result<Self> {
        s.require_graded()?;
        let n = s.arity();
        let images = (0..n)
            .map(|i| {
                let mut acc = Poly::zero(n);
                for k in 0..n {
                    if k != i {
                        acc = &acc - &s.bracket(i, k).d(k);
                    }
                }
                acc
            })
            .collect();
        Ok(Derivation::from_parts(s.grading().clone(), images, 0))
    }

    pub fn grading(&self) -> &WeightedGrading {
        &self.grading
    }

    pub fn arity(&self) -> usize {
        self.grading.arity()
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Poly {
        &self.images[i]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Poly::is_zero)
    }

    /// `δ(f) = Σ_i ∂f/∂x_i · δ(x_i)`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        if f.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: f.arity(),
            });
        }
        let mut out = Poly::zero(self.arity());
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let di = f.d(i);
            if !di.is_zero() {
                out = &out + &(&di * img);
            }
        }
        Ok(out)
    }

    pub(crate) fn ap(&self, f: &Poly) -> Poly {
        self.apply(f).expect("arity checked by caller")
    }

    /// `Σ_i ∂δ(x_i)/∂x_i`.
    pub fn divergence(&self) -> Poly {
        let mut out = Poly::zero(self.arity());
        for (i, img) in self.images.iter().enumerate() {
            out = &out + &img.d(i);
        }
        out
    }

    fn check_compatible(&self, other: &Derivation) -> Result<()> {
        if self.grading != other.grading {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(())
    }

    fn combine(&self, other: &Derivation, f: impl Fn(&Poly, &Poly) -> Poly) -> Result<Self> {
        self.check_compatible(other)?;
        let images: Vec<Poly> = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| f(a, b))
            .collect();
        // A zero summand carries no degree information.
        let degree = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.degree,
            (_, true) => self.degree,
            _ if self.degree == other.degree => self.degree,
            _ => {
                return Err(Error::DerivationDegree {
                    expected: self.degree,
                    found: other.degree,
                })
            }
        };
        Ok(Derivation {
            grading: self.grading.clone(),
            images,
            degree,
        })
    }

    pub fn add(&self, other: &Derivation) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Derivation) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Derivation {
            grading: self.grading.clone(),
            images: self.images.iter().map(|p| p.scale(c)).collect(),
            degree: self.degree,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::from_integer(1.into()))
    }

    /// Multiplies every image by the homogeneous polynomial `a`.
    pub fn mul_poly(&self, a: &Poly) -> Result<Self> {
        let images: Vec<Poly> = self
            .images
            .iter()
            .map(|p| p.checked_mul(a))
            .collect::<Result<_>>()?;
        let shift = match a.weighted_degree(&self.grading) {
            Homogeneity::Degree(d) => d,
            Homogeneity::Zero => 0,
            Homogeneity::NonHomogeneous => return Err(Error::NotHomogeneous(a.to_string())),
        };
        Self::new(self.grading.clone(), images, self.degree + shift)
    }

    /// `[a, b] = a∘b − b∘a`, of degree `|a| + |b|`.
    pub fn commutator(&self, other: &Derivation) -> Result<Self> {
        self.check_compatible(other)?;
        let images = (0..self.arity())
            .map(|i| &self.ap(&other.images[i]) - &other.ap(&self.images[i]))
            .collect();
        Ok(Derivation {
            grading: self.grading.clone(),
            images,
            degree: self.degree + other.degree,
        })
    }

    /// The level-one cochain with the same coefficients.
    pub fn to_skew(&self) -> SkewDerivation {
        SkewDerivation::from_derivation(self)
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Derivation(degree {}; ", self.degree)?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{img}")?;
        }
        f.write_str(")")
    }
}

fn require_same_ring(s: &PoissonStructure, delta: &Derivation) -> Result<()> {
    if s.grading() != delta.grading() {
        return Err(Error::ArityMismatch {
            expected: s.arity(),
            found: delta.arity(),
        });
    }
    Ok(())
}

fn require_degree_zero(delta: &Derivation) -> Result<()> {
    if delta.degree() != 0 && !delta.is_zero() {
        return Err(Error::DerivationDegree {
            expected: 0,
            found: delta.degree(),
        });
    }
    Ok(())
}

pub fn is_unimodular(s: &PoissonStructure) -> Result<bool> {
    Ok(Derivation::modular(s)?.is_zero())
}

/// Coefficients of `d_π¹(δ)`:
/// `{x_i, δ(x_j)} − {x_j, δ(x_i)} − δ(P_ij)` on `∂_i ∧ ∂_j`.
pub fn d_pi1(s: &PoissonStructure, delta: &Derivation) -> Result<SkewDerivation> {
    require_same_ring(s, delta)?;
    Ok(SkewDerivation::from_pairs(
        s.grading(),
        delta.degree(),
        d_pi1_pairs(s, delta),
    ))
}

/// `d_π¹(δ)` coefficients in pair order `(0,1), (0,2), …`.
pub(crate) fn d_pi1_pairs(s: &PoissonStructure, delta: &Derivation) -> Vec<Poly> {
    s.entries()
        .map(|((i, j), p)| {
            let a = s.bracket_with_var(i, delta.image(j));
            let b = s.bracket_with_var(j, delta.image(i));
            &(&a - &b) - &delta.ap(p)
        })
        .collect()
}

pub fn is_poisson_derivation(s: &PoissonStructure, delta: &Derivation) -> Result<bool> {
    require_same_ring(s, delta)?;
    Ok(d_pi1_pairs(s, delta).iter().all(Poly::is_zero))
}

/// Values of `E ∧ D` on generator triples `i < j < k` for a level-two
/// cochain `D` given in pair order.
pub(crate) fn euler_wedge_triples(g: &WeightedGrading, pairs: &[Poly]) -> Vec<Poly> {
    let n = g.arity();
    let idx = |i: usize, j: usize| i * (2 * n - i - 1) / 2 + (j - i - 1);
    let e = |i: usize| Poly::var(n, i).scale_int(g.weight(i));
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let t = &(&(&e(i) * &pairs[idx(j, k)]) - &(&e(j) * &pairs[idx(i, k)]))
                    + &(&e(k) * &pairs[idx(i, j)]);
                out.push(t);
            }
        }
    }
    out
}

/// Whether `E ∧ d_π¹(δ)` vanishes. Requires a degree-0 `δ` and a graded
/// structure.
pub fn is_semi_poisson(s: &PoissonStructure, delta: &Derivation) -> Result<bool> {
    require_same_ring(s, delta)?;
    require_degree_zero(delta)?;
    s.require_graded()?;
    let pairs = d_pi1_pairs(s, delta);
    Ok(euler_wedge_triples(s.grading(), &pairs)
        .iter()
        .all(Poly::is_zero))
}

/// Coefficients `w_i x_i δ(x_j) − w_j x_j δ(x_i)` in pair order.
fn euler_wedge_pairs(delta: &Derivation) -> Vec<((usize, usize), Poly)> {
    let g = delta.grading();
    let n = g.arity();
    let e = |i: usize| Poly::var(n, i).scale_int(g.weight(i));
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = &(&e(i) * delta.image(j)) - &(&e(j) * delta.image(i));
            out.push(((i, j), c));
        }
    }
    out
}

/// `E ∧ δ` as a level-two cochain.
pub fn wedge_with_euler(delta: &Derivation) -> SkewDerivation {
    let pairs = euler_wedge_pairs(delta)
        .into_iter()
        .map(|(_, c)| c)
        .collect();
    SkewDerivation::from_pairs(delta.grading(), delta.degree(), pairs)
}

/// The graded twist `π + E ∧ δ`.
///
/// `δ` must have degree 0 and be semi-Poisson for `s`, and `s` must be a
/// graded Poisson structure; the result is then graded and Poisson.
pub fn twist(s: &PoissonStructure, delta: &Derivation) -> Result<PoissonStructure> {
    s.require_graded()?;
    s.require_poisson()?;
    if !is_semi_poisson(s, delta)? {
        return Err(Error::NotSemiPoisson);
    }
    let entries = euler_wedge_pairs(delta)
        .into_iter()
        .map(|((i, j), c)| ((i, j), s.upper(i, j) + &c));
    let t = PoissonStructure::new(s.grading().clone(), entries)?;
    debug_assert!(t.verify_graded() && t.verify_poisson());
    Ok(t.mark_verified())
}

/// `𝐦 + 𝔩δ − div(δ)E`, the modular derivation that the twist by `δ` is
/// expected to have.
pub fn twist_modular_prediction(s: &PoissonStructure, delta: &Derivation) -> Result<Derivation> {
    s.grading().require_positive()?;
    if !is_semi_poisson(s, delta)? {
        return Err(Error::NotSemiPoisson);
    }
    let g = s.grading();
    let m = Derivation::modular(s)?;
    let total = Rational::from_integer(g.total().into());
    let div = delta.divergence();
    // For degree 0 and positive weights the divergence is a constant.
    let c = div.constant_term();
    debug_assert!(div.is_zero() || div.num_terms() == 1 && !c.is_zero());
    m.add(&delta.scale(&total))?
        .sub(&Derivation::euler(g).scale(&c))
}

/// Returns `(twist(s, δ), δ)` with `δ = −𝐦/𝔩`; the twist is unimodular.
pub fn unimodularize(s: &PoissonStructure) -> Result<(PoissonStructure, Derivation)> {
    let g = s.grading();
    g.require_positive()?;
    let m = Derivation::modular(s)?;
    let delta = m.scale(&-Rational::new(1.into(), g.total().into()));
    let unim = twist(s, &delta)?;
    Ok((unim, delta))
}

/// Checks `π = π_unim + (1/𝔩) E ∧ 𝐦` entrywise.
pub fn decomposition_holds(s: &PoissonStructure, unim: &PoissonStructure) -> Result<bool> {
    let g = s.grading();
    let m = Derivation::modular(s)?;
    let inv = Rational::new(1.into(), g.total().into());
    Ok(euler_wedge_pairs(&m)
        .into_iter()
        .all(|((i, j), c)| s.upper(i, j) == &(unim.upper(i, j) + &c.scale(&inv))))
}

impl Derivation {
    /// True when every image is a rational multiple of the matching Euler
    /// image by one common scalar.
    pub fn euler_multiple(&self) -> Option<Rational> {
        let e = Derivation::euler(&self.grading);
        let mut ratio: Option<Rational> = None;
        for (a, b) in self.images.iter().zip(e.images()) {
            if b.is_zero() {
                if !a.is_zero() {
                    return None;
                }
                continue;
            }
            let (exps, cb) = b.terms().next().expect("nonzero");
            let r = a.coefficient(exps) / cb;
            if &b.scale(&r) != a {
                return None;
            }
            match &ratio {
                Some(q) if *q != r => return None,
                _ => ratio = Some(r),
            }
        }
        Some(ratio.unwrap_or_else(Rational::zero))
    }
}
