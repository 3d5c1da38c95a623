//! JSON encodings of the exact types: series, polynomials, ideals, weight
//! grids, matrices, model points and parametrized families.
//!
//! Rationals always travel as strings `"p/q"` (or `"p"`), never as floats,
//! so every file round-trips losslessly.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use spherotrop_core::exact_arith::{format_rational, PuiseuxSeries, Rational, Truncation};
use spherotrop_core::poly_engine::{Polynomial, RingMode};
use spherotrop_core::snf_series::SeriesMatrix;
use spherotrop_core::spherical_core::{ModelPoint, SphericalModel};
use spherotrop_core::spherical_trop::ModelFamily;

use crate::CliError;

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::input(format!("bad rational literal: {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

pub fn rational_string(q: &Rational) -> String {
    format_rational(q)
}

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

/// `{"k": 1, "terms": [[e, "p/q"], ...], "trunc": "p/q" | "exact"}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub k: u64,
    pub terms: Vec<(i64, String)>,
    pub trunc: String,
}

impl SeriesJson {
    pub fn to_core(&self) -> Result<PuiseuxSeries, CliError> {
        if self.k == 0 {
            return Err(CliError::input("series ramification must be positive"));
        }
        let trunc = if self.trunc == "exact" {
            Truncation::Exact
        } else {
            Truncation::To(parse_rational(&self.trunc)?)
        };
        let terms: Vec<(i64, Rational)> = self
            .terms
            .iter()
            .map(|(e, c)| Ok((*e, parse_rational(c)?)))
            .collect::<Result<_, CliError>>()?;
        Ok(PuiseuxSeries::from_terms(self.k, terms, trunc))
    }

    pub fn from_core(s: &PuiseuxSeries) -> SeriesJson {
        let k = s.ramification();
        let terms = s
            .terms()
            .map(|(e, c)| {
                let num = (&e * Rational::from_integer(k.into())).to_integer();
                (
                    num.try_into().expect("exponent fits in i64"),
                    rational_string(c),
                )
            })
            .collect();
        let trunc = match s.truncation() {
            Truncation::Exact => "exact".to_string(),
            Truncation::To(t) => rational_string(t),
        };
        SeriesJson { k, terms, trunc }
    }
}

// ---------------------------------------------------------------------------
// Polynomials and ideals
// ---------------------------------------------------------------------------

/// Coefficient: `"p/q"` or a full series object.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Rational(String),
    Series(SeriesJson),
}

impl CoeffJson {
    pub fn to_series(&self) -> Result<PuiseuxSeries, CliError> {
        match self {
            CoeffJson::Rational(s) => Ok(PuiseuxSeries::constant(parse_rational(s)?)),
            CoeffJson::Series(s) => s.to_core(),
        }
    }
}

pub type TermJson = (Vec<i64>, CoeffJson);

/// `{"vars": [...], "mode": "poly"|"laurent", "terms": [[[e...], coeff]...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: Vec<String>,
    pub mode: String,
    pub terms: Vec<TermJson>,
}

pub fn parse_mode(mode: &str) -> Result<RingMode, CliError> {
    match mode {
        "poly" => Ok(RingMode::Poly),
        "laurent" => Ok(RingMode::Laurent),
        other => Err(CliError::input(format!("unknown ring mode {other:?}"))),
    }
}

pub fn mode_string(mode: RingMode) -> String {
    match mode {
        RingMode::Poly => "poly".into(),
        RingMode::Laurent => "laurent".into(),
    }
}

impl PolynomialJson {
    pub fn to_rational_poly(&self) -> Result<Polynomial<Rational>, CliError> {
        let mode = parse_mode(&self.mode)?;
        let nvars = self.vars.len();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            if e.len() != nvars {
                return Err(CliError::input("exponent arity does not match vars"));
            }
            if mode == RingMode::Poly && e.iter().any(|&x| x < 0) {
                return Err(CliError::input(
                    "negative exponent in polynomial (non-laurent) mode",
                ));
            }
            let coeff = match c {
                CoeffJson::Rational(s) => parse_rational(s)?,
                CoeffJson::Series(_) => {
                    return Err(CliError::input(
                        "series coefficients are not allowed here; expected rationals",
                    ))
                }
            };
            terms.push((e.clone(), coeff));
        }
        Ok(Polynomial::from_terms(nvars, mode, terms))
    }

    pub fn to_series_poly(&self) -> Result<Polynomial<PuiseuxSeries>, CliError> {
        let mode = parse_mode(&self.mode)?;
        let nvars = self.vars.len();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            if e.len() != nvars {
                return Err(CliError::input("exponent arity does not match vars"));
            }
            terms.push((e.clone(), c.to_series()?));
        }
        Ok(Polynomial::from_terms(nvars, mode, terms))
    }

    pub fn from_rational_poly(vars: &[String], p: &Polynomial<Rational>) -> PolynomialJson {
        PolynomialJson {
            vars: vars.to_vec(),
            mode: mode_string(p.mode()),
            terms: p
                .terms()
                .map(|(e, c)| (e.clone(), CoeffJson::Rational(rational_string(c))))
                .collect(),
        }
    }
}

/// `{"vars": [...], "mode": ..., "gens": [[term...]...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub mode: String,
    pub gens: Vec<Vec<TermJson>>,
}

impl IdealJson {
    pub fn to_rational_gens(&self) -> Result<Vec<Polynomial<Rational>>, CliError> {
        self.gens
            .iter()
            .map(|terms| {
                PolynomialJson {
                    vars: self.vars.clone(),
                    mode: self.mode.clone(),
                    terms: terms.clone(),
                }
                .to_rational_poly()
            })
            .collect()
    }

    pub fn to_series_gens(&self) -> Result<Vec<Polynomial<PuiseuxSeries>>, CliError> {
        self.gens
            .iter()
            .map(|terms| {
                PolynomialJson {
                    vars: self.vars.clone(),
                    mode: self.mode.clone(),
                    terms: terms.clone(),
                }
                .to_series_poly()
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Grids and matrices
// ---------------------------------------------------------------------------

/// `{"points": [["p/q", ...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridJson {
    pub points: Vec<Vec<String>>,
}

impl GridJson {
    pub fn to_weights(&self) -> Result<Vec<Vec<Rational>>, CliError> {
        self.points
            .iter()
            .map(|p| p.iter().map(|s| parse_rational(s)).collect())
            .collect()
    }
}

/// `{"n": 2, "entries": [[series, ...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<SeriesJson>>,
}

impl MatrixJson {
    pub fn to_core(&self) -> Result<SeriesMatrix, CliError> {
        if self.entries.len() != self.n || self.entries.iter().any(|r| r.len() != self.n) {
            return Err(CliError::input("matrix entries do not match n"));
        }
        let rows: Vec<Vec<PuiseuxSeries>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|s| s.to_core()).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        SeriesMatrix::new(rows).map_err(|e| CliError::input(e.to_string()))
    }

    pub fn from_core(m: &SeriesMatrix) -> MatrixJson {
        MatrixJson {
            n: m.n(),
            entries: m
                .rows()
                .iter()
                .map(|row| row.iter().map(SeriesJson::from_core).collect())
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Models, points and families
// ---------------------------------------------------------------------------

pub fn parse_model(name: &str) -> Result<SphericalModel, CliError> {
    match name {
        "sl2" => Ok(SphericalModel::Sl2PuncturedPlane),
        "gl2" => Ok(SphericalModel::Gln(2)),
        other => {
            if let Some(rest) = other.strip_prefix("torus:") {
                let n: usize = rest
                    .parse()
                    .map_err(|_| CliError::input(format!("bad torus rank in {other:?}")))?;
                return Ok(SphericalModel::Torus(n));
            }
            if let Some(rest) = other.strip_prefix("gl") {
                let n: usize = rest
                    .parse()
                    .map_err(|_| CliError::input(format!("unknown model {other:?}")))?;
                return Ok(SphericalModel::Gln(n));
            }
            Err(CliError::input(format!(
                "unknown model {other:?} (expected sl2, gl2, gl<n> or torus:<n>)"
            )))
        }
    }
}

/// A model point: torus/plane coordinates or a matrix.
/// `{"coords": [series...]}` or `{"entries": [[series...]...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<SeriesJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<SeriesJson>>>,
}

impl PointJson {
    pub fn to_core(&self, model: &SphericalModel) -> Result<ModelPoint, CliError> {
        match model {
            SphericalModel::Torus(n) => {
                let coords = self
                    .coords
                    .as_ref()
                    .ok_or_else(|| CliError::input("torus point needs \"coords\""))?;
                if coords.len() != *n {
                    return Err(CliError::input("wrong number of coordinates"));
                }
                Ok(ModelPoint::Torus(
                    coords
                        .iter()
                        .map(|s| s.to_core())
                        .collect::<Result<_, _>>()?,
                ))
            }
            SphericalModel::Sl2PuncturedPlane => {
                let coords = self
                    .coords
                    .as_ref()
                    .ok_or_else(|| CliError::input("plane point needs \"coords\""))?;
                if coords.len() != 2 {
                    return Err(CliError::input("plane point needs two coordinates"));
                }
                Ok(ModelPoint::Sl2(coords[0].to_core()?, coords[1].to_core()?))
            }
            SphericalModel::Gln(n) => {
                let entries = self
                    .entries
                    .as_ref()
                    .ok_or_else(|| CliError::input("matrix point needs \"entries\""))?;
                let mj = MatrixJson {
                    n: *n,
                    entries: entries.clone(),
                };
                Ok(ModelPoint::Gln(mj.to_core()?))
            }
        }
    }
}

/// A parametrized family: entries are exact Laurent series in the parameter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<SeriesJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<SeriesJson>>>,
}

impl FamilyJson {
    pub fn to_core(&self, model: &SphericalModel) -> Result<ModelFamily, CliError> {
        match model {
            SphericalModel::Torus(n) => {
                let coords = self
                    .coords
                    .as_ref()
                    .ok_or_else(|| CliError::input("torus family needs \"coords\""))?;
                if coords.len() != *n {
                    return Err(CliError::input("wrong number of coordinates"));
                }
                Ok(ModelFamily::Torus(
                    coords
                        .iter()
                        .map(|s| s.to_core())
                        .collect::<Result<_, _>>()?,
                ))
            }
            SphericalModel::Sl2PuncturedPlane => {
                let coords = self
                    .coords
                    .as_ref()
                    .ok_or_else(|| CliError::input("plane family needs \"coords\""))?;
                if coords.len() != 2 {
                    return Err(CliError::input("plane family needs two coordinates"));
                }
                Ok(ModelFamily::Sl2(coords[0].to_core()?, coords[1].to_core()?))
            }
            SphericalModel::Gln(n) => {
                let entries = self
                    .entries
                    .as_ref()
                    .ok_or_else(|| CliError::input("matrix family needs \"entries\""))?;
                if entries.len() != *n || entries.iter().any(|r| r.len() != *n) {
                    return Err(CliError::input("family entries do not match model size"));
                }
                Ok(ModelFamily::Gln(
                    entries
                        .iter()
                        .map(|row| row.iter().map(|s| s.to_core()).collect::<Result<_, _>>())
                        .collect::<Result<_, _>>()?,
                ))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Polyhedra
// ---------------------------------------------------------------------------

/// One polyhedral piece: `{"equalities": [[coef..., offset]...],
/// "inequalities": [[coef..., offset]...]}` with each row meaning
/// `coef . x + offset (= | >=) 0`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PieceJson {
    pub equalities: Vec<Vec<String>>,
    pub inequalities: Vec<Vec<String>>,
}

impl PieceJson {
    pub fn from_core(p: &spherotrop_core::geometry::Polyhedron) -> PieceJson {
        use spherotrop_core::geometry::Rel;
        let canon = p.canonical();
        let mut equalities = Vec::new();
        let mut inequalities = Vec::new();
        for h in canon.halfspaces() {
            let mut row: Vec<String> = h.normal.iter().map(rational_string).collect();
            row.push(rational_string(&h.offset));
            match h.rel {
                Rel::Eq => equalities.push(row),
                Rel::Ge => inequalities.push(row),
            }
        }
        PieceJson {
            equalities,
            inequalities,
        }
    }

    pub fn to_core(&self, nvars: usize) -> Result<spherotrop_core::geometry::Polyhedron, CliError> {
        use spherotrop_core::geometry::{Halfspace, Polyhedron};
        let mut hs = Vec::new();
        for (rows, eq) in [(&self.equalities, true), (&self.inequalities, false)] {
            for row in rows.iter() {
                if row.len() != nvars + 1 {
                    return Err(CliError::input("piece row has wrong arity"));
                }
                let mut normal = Vec::with_capacity(nvars);
                for s in &row[..nvars] {
                    normal.push(parse_rational(s)?);
                }
                let offset = parse_rational(&row[nvars])?;
                hs.push(if eq {
                    Halfspace::eq(normal, offset)
                } else {
                    Halfspace::ge(normal, offset)
                });
            }
        }
        Ok(Polyhedron::new(nvars, hs))
    }
}
