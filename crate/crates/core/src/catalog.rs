//! Named Poisson structures with their recorded invariants.
//!
//! Parameters are passed as `(key, value)` strings. Rational values accept
//! `p` or `p/q`; integer values accept a plain integer. Unknown keys are
//! rejected.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::calculus::{self, Derivation};
use crate::error::{Error, Result};
use crate::poisson::PoissonStructure;
use crate::poly::{Poly, WeightedGrading};
use crate::{rat, Rational};

/// Invariants recorded for an entry. `None` means nothing is asserted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expected {
    pub rgt: Option<i64>,
    pub unimodular: Option<bool>,
    pub modular: Option<Derivation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    /// Fully resolved parameters, defaults included.
    pub params: BTreeMap<String, String>,
    pub structure: PoissonStructure,
    /// The potential for Jacobian structures on three variables.
    pub potential: Option<Poly>,
    /// Named derivations packaged with the structure.
    pub derivations: Vec<(String, Derivation)>,
    pub expected: Expected,
    /// Boolean remarks about the chosen parameters.
    pub flags: BTreeMap<String, bool>,
    pub provenance: String,
}

impl CatalogEntry {
    pub fn derivation(&self, name: &str) -> Option<&Derivation> {
        self.derivations
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, d)| d)
    }

    /// Display label such as `hesse(lambda=1)`.
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            return self.name.clone();
        }
        let ps: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{}({})", self.name, ps.join(","))
    }
}

/// Short descriptions, in listing order.
pub const ENTRIES: &[(&str, &str)] = &[
    ("trivial3", "zero bracket on k[x,y,z]"),
    ("cubic_x3", "Jacobian structure of x^3"),
    ("cubic_x2y", "Jacobian structure of x^2*y"),
    ("cubic_xyz", "Jacobian structure of x*y*z"),
    ("cubic_xy_x_plus_y", "Jacobian structure of x*y*(x+y)"),
    ("cubic_xyz_x3", "Jacobian structure of x*y*z + x^3"),
    ("cubic_xy2_x2z", "Jacobian structure of x*y^2 + x^2*z"),
    ("cubic_x3_y2z", "Jacobian structure of x^3 + y^2*z (cusp)"),
    ("cubic_x3_x2z_y2z", "Jacobian structure of x^3 + x^2*z + y^2*z (node)"),
    ("hesse", "Jacobian structure of (x^3+y^3+z^3)/3 + lambda*x*y*z; param lambda (default 0)"),
    ("sextic_weighted", "Jacobian structure of x^6 + y^3 + z^2 + lambda*x*y*z, weights (1,2,3); param lambda (default 0)"),
    ("rank1", "{x1,x2} = x1^n on weights (1, n-1); param n (default 2)"),
    ("ex2_6", "{x,y} = x^2 with the derivations phi, f, g"),
    ("log_canonical", "{xi,xj} = p_i_j*xi*xj; params n (default 3), p_i_j (default 1)"),
    ("weyl_twist", "twist of the Weyl bracket {xi,yj} = [i=j] by the matrix M; params n (default 2), m_i_j (default: ones on the superdiagonal)"),
];

/// The ten unimodular quadratic normal forms on three variables.
pub const QUADRATIC_NORMAL_FORMS: &[&str] = &[
    "trivial3",
    "cubic_x3",
    "cubic_x2y",
    "cubic_xyz",
    "cubic_xy_x_plus_y",
    "cubic_xyz_x3",
    "cubic_xy2_x2z",
    "cubic_x3_y2z",
    "cubic_x3_x2z_y2z",
    "hesse",
];

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|(n, _)| *n)
}

struct Params<'a> {
    entry: &'a str,
    given: BTreeMap<String, String>,
    resolved: BTreeMap<String, String>,
}

impl<'a> Params<'a> {
    fn new(entry: &'a str, params: &[(String, String)]) -> Result<Self> {
        let mut given = BTreeMap::new();
        for (k, v) in params {
            if given.insert(k.clone(), v.clone()).is_some() {
                return Err(invalid(entry, format!("parameter `{k}` given twice")));
            }
        }
        Ok(Params {
            entry,
            given,
            resolved: BTreeMap::new(),
        })
    }

    fn rational(&mut self, key: &str, default: Rational) -> Result<Rational> {
        let value = match self.given.remove(key) {
            Some(text) => Rational::from_str(text.trim()).map_err(|_| {
                invalid(
                    self.entry,
                    format!("`{key}` must be a rational, got `{text}`"),
                )
            })?,
            None => default,
        };
        self.resolved
            .insert(key.to_string(), crate::poly::format_rational(&value));
        Ok(value)
    }

    fn integer(&mut self, key: &str, default: i64, min: i64, max: i64) -> Result<i64> {
        let value = match self.given.remove(key) {
            Some(text) => text.trim().parse::<i64>().map_err(|_| {
                invalid(
                    self.entry,
                    format!("`{key}` must be an integer, got `{text}`"),
                )
            })?,
            None => default,
        };
        if value < min || value > max {
            return Err(invalid(
                self.entry,
                format!("`{key}` must lie in [{min}, {max}], got {value}"),
            ));
        }
        self.resolved.insert(key.to_string(), value.to_string());
        Ok(value)
    }

    fn finish(self) -> Result<BTreeMap<String, String>> {
        if let Some(k) = self.given.keys().next() {
            return Err(invalid(self.entry, format!("unknown parameter `{k}`")));
        }
        Ok(self.resolved)
    }
}

fn invalid(entry: &str, message: String) -> Error {
    Error::InvalidParameter {
        entry: entry.to_string(),
        message,
    }
}

fn p3(text: &str) -> Poly {
    Poly::parse(text, 3).expect("built-in polynomial")
}

fn potential_entry(
    name: &str,
    params: BTreeMap<String, String>,
    omega: Poly,
    grading: WeightedGrading,
    rgt: Option<i64>,
    provenance: &str,
) -> Result<CatalogEntry> {
    let structure = PoissonStructure::from_potential(&omega, grading.clone())?.into_verified()?;
    Ok(CatalogEntry {
        name: name.to_string(),
        params,
        structure,
        potential: Some(omega),
        derivations: Vec::new(),
        expected: Expected {
            rgt,
            unimodular: Some(true),
            modular: Some(Derivation::zero(grading, 0)),
        },
        flags: BTreeMap::new(),
        provenance: provenance.to_string(),
    })
}

/// Builds a named entry. Every returned structure has been checked to be
/// graded and Poisson.
pub fn get(name: &str, params: &[(String, String)]) -> Result<CatalogEntry> {
    let mut ps = Params::new(name, params)?;
    let std3 = WeightedGrading::standard(3);
    let fixed = |omega: &str, rgt: i64, what: &str| -> Result<CatalogEntry> {
        potential_entry(
            name,
            BTreeMap::new(),
            p3(omega),
            WeightedGrading::standard(3),
            Some(rgt),
            what,
        )
    };
    let entry = match name {
        "trivial3" => fixed("0", -8, "unimodular quadratic normal form: zero potential")?,
        "cubic_x3" => fixed("x^3", -5, "unimodular quadratic normal form: triple plane")?,
        "cubic_x2y" => fixed(
            "x^2*y",
            -3,
            "unimodular quadratic normal form: double plane and plane",
        )?,
        "cubic_xyz" => fixed(
            "x*y*z",
            -2,
            "unimodular quadratic normal form: three planes",
        )?,
        "cubic_xy_x_plus_y" => fixed(
            "x^2*y + x*y^2",
            -2,
            "unimodular quadratic normal form: three concurrent planes",
        )?,
        "cubic_xyz_x3" => fixed(
            "x*y*z + x^3",
            -1,
            "unimodular quadratic normal form: plane and conic",
        )?,
        "cubic_xy2_x2z" => fixed(
            "x*y^2 + x^2*z",
            -1,
            "unimodular quadratic normal form: plane and tangent conic",
        )?,
        "cubic_x3_y2z" => fixed(
            "x^3 + y^2*z",
            0,
            "unimodular quadratic normal form: cuspidal cubic",
        )?,
        "cubic_x3_x2z_y2z" => fixed(
            "x^3 + x^2*z + y^2*z",
            0,
            "unimodular quadratic normal form: nodal cubic",
        )?,
        "hesse" => {
            let lambda = ps.rational("lambda", Rational::zero())?;
            if &lambda * &lambda * &lambda == -Rational::one() {
                return Err(invalid(name, "lambda^3 = -1 gives a singular cubic".into()));
            }
            let omega = &p3("1/3*x^3 + 1/3*y^3 + 1/3*z^3") + &p3("x*y*z").scale(&lambda);
            potential_entry(
                name,
                ps.finish()?,
                omega,
                std3,
                Some(0),
                "unimodular quadratic normal form: smooth cubic in Hesse form",
            )?
        }
        "sextic_weighted" => {
            let lambda = ps.rational("lambda", Rational::zero())?;
            let weights = WeightedGrading::new(vec![1, 2, 3]);
            let omega = &p3("x^6 + y^3 + z^2") + &p3("x*y*z").scale(&lambda);
            let rgt = (lambda.is_zero() || lambda.is_one()).then_some(0);
            let l6 = lambda.pow(6);
            let mut e = potential_entry(
                name,
                ps.finish()?,
                omega,
                weights,
                rgt,
                "weighted Jacobian structure with potential of degree 6 under weights (1,2,3)",
            )?;
            e.flags
                .insert("lambda6_equals_216".into(), l6 == rat(216, 1));
            e
        }
        "rank1" => {
            let n = ps.integer("n", 2, 0, 64)?;
            let g = WeightedGrading::new(vec![1, n - 1]);
            let x1 = Poly::var(2, 0);
            let s = PoissonStructure::verified(g.clone(), [((0, 1), x1.pow(n as u32))])?;
            let modular = Derivation::new(
                g,
                vec![Poly::zero(2), x1.pow((n.max(1) - 1) as u32).scale_int(n)],
                0,
            )?;
            CatalogEntry {
                name: name.into(),
                params: ps.finish()?,
                structure: s,
                potential: None,
                derivations: Vec::new(),
                expected: Expected {
                    rgt: None,
                    unimodular: Some(n == 0),
                    modular: Some(modular),
                },
                flags: BTreeMap::new(),
                provenance: "rank-one bracket on the plane, graded by weights (1, n-1)".into(),
            }
        }
        "ex2_6" => {
            let g = WeightedGrading::standard(2);
            let p2 = |t: &str| Poly::parse(t, 2).expect("built-in polynomial");
            let s = PoissonStructure::verified(g.clone(), [((0, 1), p2("x^2"))])?;
            let der = |a: &str, b: &str| Derivation::new(g.clone(), vec![p2(a), p2(b)], 0);
            CatalogEntry {
                name: name.into(),
                params: ps.finish()?,
                structure: s,
                potential: None,
                derivations: vec![
                    ("phi".into(), der("-x", "y - x")?),
                    ("f".into(), der("0", "-x")?),
                    ("g".into(), der("-x", "y")?),
                ],
                expected: Expected {
                    rgt: None,
                    unimodular: Some(false),
                    modular: Some(der("0", "2*x")?),
                },
                flags: BTreeMap::new(),
                provenance: "quadratic bracket on the plane with a semi-Poisson, non-Poisson derivation phi = f + g".into(),
            }
        }
        "log_canonical" => {
            let n = ps.integer("n", 3, 1, 12)? as usize;
            let g = WeightedGrading::standard(n);
            let mut entries = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let p = ps.rational(&format!("p_{}_{}", i + 1, j + 1), Rational::one())?;
                    let b = (&Poly::var(n, i) * &Poly::var(n, j)).scale(&p);
                    entries.push(((i, j), b));
                }
            }
            let s = PoissonStructure::verified(g, entries)?;
            CatalogEntry {
                name: name.into(),
                params: ps.finish()?,
                structure: s,
                potential: None,
                derivations: Vec::new(),
                expected: Expected::default(),
                flags: BTreeMap::new(),
                provenance: "log-canonical bracket, entered directly with all weights one".into(),
            }
        }
        "weyl_twist" => {
            let n = ps.integer("n", 2, 1, 6)? as usize;
            let mut m = vec![vec![Rational::zero(); n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    let default = if j == i + 1 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    *v = ps.rational(&format!("m_{}_{}", i + 1, j + 1), default)?;
                }
            }
            let (weyl, delta) = weyl_pair(n, &m)?;
            let s = calculus::twist(&weyl, &delta)?.into_verified()?;
            CatalogEntry {
                name: name.into(),
                params: ps.finish()?,
                structure: s,
                potential: None,
                derivations: vec![("delta1".into(), delta)],
                expected: Expected::default(),
                flags: BTreeMap::new(),
                provenance: "graded twist of the Weyl bracket on k[x1..xn, y1..yn] with weights 1 on x and -1 on y".into(),
            }
        }
        _ => return Err(Error::UnknownEntry(name.to_string())),
    };
    Ok(entry)
}

/// The Weyl structure on `2n` variables (`x_i` at index `i`, `y_i` at
/// index `n + i`) and the derivation `δ₁(x_i) = −Σ_j m_ij x_j`,
/// `δ₁(y_i) = Σ_j m_ji y_j`.
pub fn weyl_pair(n: usize, m: &[Vec<Rational>]) -> Result<(PoissonStructure, Derivation)> {
    let arity = 2 * n;
    let mut weights = vec![1; n];
    weights.extend(vec![-1; n]);
    let g = WeightedGrading::new(weights);
    let weyl =
        PoissonStructure::verified(g.clone(), (0..n).map(|i| ((i, n + i), Poly::one(arity))))?;
    let mut images = Vec::with_capacity(arity);
    for i in 0..n {
        let mut acc = Poly::zero(arity);
        for (j, c) in m[i].iter().enumerate() {
            acc = &acc - &Poly::var(arity, j).scale(c);
        }
        images.push(acc);
    }
    for i in 0..n {
        let mut acc = Poly::zero(arity);
        for (j, row) in m.iter().enumerate() {
            acc = &acc + &Poly::var(arity, n + j).scale(&row[i]);
        }
        images.push(acc);
    }
    let delta = Derivation::new(g, images, 0)?;
    Ok((weyl, delta))
}

/// Recorded `rgt` for an entry, if any.
pub fn expected_rgt(name: &str, params: &[(String, String)]) -> Result<i64> {
    get(name, params)?
        .expected
        .rgt
        .ok_or_else(|| Error::NoExpectation(name.to_string()))
}
