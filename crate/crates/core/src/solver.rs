//! Degree-sliced linear algebra on derivation spaces: Poisson,
//! semi-Poisson and ozone derivations, the Poisson center, `rgt`, and the
//! finite-window verdicts comparing them.
//!
//! The degree-`d` derivation basis is `m ∂_i` for each slot `i` (outer
//! loop) and each monomial `m` of degree `d + w_i` in grevlex order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::calculus::{self, Derivation};
use crate::error::{Error, Result};
use crate::linalg::LinearProblem;
use crate::poisson::PoissonStructure;
use crate::poly::{Poly, WeightedGrading};
use crate::Rational;

fn require_solvable(s: &PoissonStructure) -> Result<()> {
    s.grading().require_positive()?;
    s.require_graded()
}

/// Basis `m ∂_i` of the derivations of internal degree `d`.
pub fn derivation_basis(g: &WeightedGrading, d: i64) -> Result<Vec<Derivation>> {
    g.require_positive()?;
    let n = g.arity();
    let mut out = Vec::new();
    for i in 0..n {
        for m in g.monomial_basis(d + g.weight(i))? {
            let mut images = vec![Poly::zero(n); n];
            images[i] = Poly::monomial(n, m, Rational::one());
            out.push(Derivation::from_parts(g.clone(), images, d));
        }
    }
    Ok(out)
}

/// `Σ_i dim A_{d + w_i}`.
pub fn derivation_space_dim(g: &WeightedGrading, d: i64) -> Result<usize> {
    g.require_positive()?;
    (0..g.arity()).map(|i| g.dim(d + g.weight(i))).sum()
}

fn combination(
    basis: &[Derivation],
    coeffs: &[Rational],
    g: &WeightedGrading,
    d: i64,
) -> Derivation {
    let mut acc = Derivation::zero(g.clone(), d);
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&b.scale(c)).expect("same degree");
    }
    acc
}

/// Kernel of the linear map `δ ↦ conditions(δ)` on degree-`d` derivations.
struct DerivationSystem {
    basis: Vec<Derivation>,
    problem: LinearProblem,
}

impl DerivationSystem {
    fn build<F>(s: &PoissonStructure, d: i64, conditions: F) -> Result<Self>
    where
        F: Fn(&Derivation) -> Vec<Poly>,
    {
        require_solvable(s)?;
        let basis = derivation_basis(s.grading(), d)?;
        let images: Vec<Vec<Poly>> = basis.iter().map(&conditions).collect();
        Ok(DerivationSystem {
            problem: LinearProblem::from_images(&images),
            basis,
        })
    }

    fn nullity(&self) -> usize {
        if self.basis.is_empty() {
            return 0;
        }
        self.problem.nullity()
    }

    fn kernel(&self, g: &WeightedGrading, d: i64) -> Vec<Derivation> {
        if self.basis.is_empty() {
            return Vec::new();
        }
        self.problem
            .solve()
            .nullspace()
            .iter()
            .map(|v| combination(&self.basis, v, g, d))
            .collect()
    }
}

fn poisson_system(s: &PoissonStructure, d: i64) -> Result<DerivationSystem> {
    DerivationSystem::build(s, d, |delta| calculus::d_pi1_pairs(s, delta))
}

fn semi_poisson_system(s: &PoissonStructure, d: i64) -> Result<DerivationSystem> {
    DerivationSystem::build(s, d, |delta| {
        calculus::euler_wedge_triples(s.grading(), &calculus::d_pi1_pairs(s, delta))
    })
}

/// `dim` of the degree-`d` Poisson derivations (`d_π¹ δ = 0`).
pub fn poisson_derivation_dim(s: &PoissonStructure, d: i64) -> Result<usize> {
    Ok(poisson_system(s, d)?.nullity())
}

pub fn poisson_derivation_basis(s: &PoissonStructure, d: i64) -> Result<Vec<Derivation>> {
    Ok(poisson_system(s, d)?.kernel(s.grading(), d))
}

/// `dim` of the degree-`d` derivations with `E ∧ d_π¹ δ = 0`; at `d = 0`
/// this is `dim Gspd`.
pub fn semi_poisson_dim(s: &PoissonStructure, d: i64) -> Result<usize> {
    Ok(semi_poisson_system(s, d)?.nullity())
}

pub fn semi_poisson_basis(s: &PoissonStructure, d: i64) -> Result<Vec<Derivation>> {
    Ok(semi_poisson_system(s, d)?.kernel(s.grading(), d))
}

/// `1 − dim Gspd`.
pub fn rgt(s: &PoissonStructure) -> Result<i64> {
    Ok(1 - semi_poisson_dim(s, 0)? as i64)
}

/// `dim Z_d`, the degree-`d` part of the Poisson center.
pub fn center_dim(s: &PoissonStructure, d: i64) -> Result<usize> {
    Ok(center_basis(s, d)?.len())
}

pub fn center_basis(s: &PoissonStructure, d: i64) -> Result<Vec<Poly>> {
    require_solvable(s)?;
    let g = s.grading();
    let n = g.arity();
    let monomials: Vec<Poly> = g
        .monomial_basis(d)?
        .into_iter()
        .map(|m| Poly::monomial(n, m, Rational::one()))
        .collect();
    if monomials.is_empty() {
        return Ok(Vec::new());
    }
    let images: Vec<Vec<Poly>> = monomials
        .iter()
        .map(|m| (0..n).map(|i| s.bracket_with_var(i, m)).collect())
        .collect();
    let kernel = LinearProblem::from_images(&images).solve().nullspace();
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut acc = Poly::zero(n);
            for (m, c) in monomials.iter().zip(&v) {
                acc = &acc + &m.scale(c);
            }
            acc
        })
        .collect())
}

/// `dim A_d − dim Z_d`, the degree-`d` Hamiltonian derivations.
pub fn hamiltonian_dim(s: &PoissonStructure, d: i64) -> Result<usize> {
    let z = center_dim(s, d)?;
    Ok(s.grading().dim(d)? - z)
}

/// `dim Pd_d − dim Hd_d`.
pub fn ph1_dim_via_solver(s: &PoissonStructure, d: i64) -> Result<usize> {
    let pd = poisson_derivation_dim(s, d)?;
    let hd = hamiltonian_dim(s, d)?;
    Ok(pd - hd)
}

/// Errors unless every supplied element is central.
pub fn require_central(s: &PoissonStructure, central: &[Poly]) -> Result<()> {
    for z in central {
        if z.arity() != s.arity() {
            return Err(Error::ArityMismatch {
                expected: s.arity(),
                found: z.arity(),
            });
        }
        if (0..s.arity()).any(|i| !s.bracket_with_var(i, z).is_zero()) {
            return Err(Error::NotCentral(z.to_string()));
        }
    }
    Ok(())
}

/// Degree-`d` Poisson derivations killing every supplied central element.
pub fn ozone_dim(s: &PoissonStructure, d: i64, central: &[Poly]) -> Result<usize> {
    require_central(s, central)?;
    let system = DerivationSystem::build(s, d, |delta| {
        let mut c = calculus::d_pi1_pairs(s, delta);
        c.extend(central.iter().map(|z| delta.ap(z)));
        c
    })?;
    Ok(system.nullity())
}

/// True when `candidate` lies in the span of `basis` (all of one degree).
pub fn in_span(basis: &[Derivation], candidate: &Derivation) -> bool {
    let mut columns: Vec<Vec<Poly>> = basis.iter().map(|b| b.images().to_vec()).collect();
    let without = LinearProblem::from_images(&columns).rank();
    columns.push(candidate.images().to_vec());
    LinearProblem::from_images(&columns).rank() == without
}

/// Dimensions attached to one internal degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeDims {
    /// `dim A_d`
    pub a: usize,
    /// `dim Z_d`
    pub z: usize,
    /// Poisson derivations of degree `d`
    pub pd: usize,
    /// Hamiltonian derivations of degree `d`
    pub hd: usize,
    /// `Pd − Hd`
    pub ph1: usize,
    /// Ozone derivations relative to the supplied central elements
    pub od: usize,
}

pub fn degree_dims(s: &PoissonStructure, d: i64, central: &[Poly]) -> Result<DegreeDims> {
    let a = s.grading().dim(d)?;
    let z = center_dim(s, d)?;
    let pd = poisson_derivation_dim(s, d)?;
    let hd = a - z;
    Ok(DegreeDims {
        a,
        z,
        pd,
        hd,
        ph1: pd - hd,
        od: ozone_dim(s, d, central)?,
    })
}

/// Per-degree window checks over `[0, N]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdicts {
    pub rgt: i64,
    pub gpd: usize,
    pub gspd: usize,
    pub unimodular: bool,
    pub dims: BTreeMap<i64, DegreeDims>,
    /// `PH¹_d == Z_d`
    pub ph1_minimal: BTreeMap<i64, bool>,
    /// `Pd_d == dim A_d`
    pub pd_equals_a: BTreeMap<i64, bool>,
    /// `Od_d == Hd_d`
    pub h_ozone: BTreeMap<i64, bool>,
}

impl Verdicts {
    pub fn all_ph1_minimal(&self) -> bool {
        self.ph1_minimal.values().all(|&b| b)
    }

    pub fn all_pd_equals_a(&self) -> bool {
        self.pd_equals_a.values().all(|&b| b)
    }

    pub fn all_h_ozone(&self) -> bool {
        self.h_ozone.values().all(|&b| b)
    }
}

/// Computes [`DegreeDims`] for `d ∈ [0, max_degree]` (one thread per
/// degree) together with `rgt` and unimodularity.
pub fn verdicts(s: &PoissonStructure, max_degree: i64, central: &[Poly]) -> Result<Verdicts> {
    require_solvable(s)?;
    require_central(s, central)?;
    let results: Vec<Result<(i64, DegreeDims)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..=max_degree)
            .map(|d| scope.spawn(move || degree_dims(s, d, central).map(|x| (d, x))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("degree slice panicked"))
            .collect()
    });
    let mut dims = BTreeMap::new();
    for r in results {
        let (d, x) = r?;
        dims.insert(d, x);
    }
    let gspd = semi_poisson_dim(s, 0)?;
    let gpd = dims.get(&0).map_or(poisson_derivation_dim(s, 0)?, |x| x.pd);
    Ok(Verdicts {
        rgt: 1 - gspd as i64,
        gpd,
        gspd,
        unimodular: calculus::is_unimodular(s)?,
        ph1_minimal: dims.iter().map(|(&d, x)| (d, x.ph1 == x.z)).collect(),
        pd_equals_a: dims.iter().map(|(&d, x)| (d, x.pd == x.a)).collect(),
        h_ozone: dims.iter().map(|(&d, x)| (d, x.od == x.hd)).collect(),
        dims,
    })
}
