//! One function per subcommand. Every command reads JSON, computes through
//! the core library, and returns a serializable output struct; outputs
//! parse back with the same schema, so results can be fed to other tools.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use spherotrop_core::exact_arith::Rational;
use spherotrop_core::geometry::Rel;
use spherotrop_core::grobner_fan::groebner_fan_enumerate;
use spherotrop_core::numeric_amoeba::{amoeba_sample, snf_svd_limit_check};
use spherotrop_core::poly_engine::Polynomial;
use spherotrop_core::snf_series::invariant_factors_elimination;
use spherotrop_core::spherical_core::model_tropicalize;
use spherotrop_core::spherical_trop::{
    gl2_borel_trop, sl2_spherical_gb, sl2_trop_hypersurface, ModelFamily,
};
use spherotrop_core::trop_classical::{
    fundamental_check, trop_hypersurface, trop_membership, TorusPoint,
};

use crate::schema::{
    parse_model, rational_string, FamilyJson, GridJson, IdealJson, MatrixJson, PieceJson,
    PointJson, PolynomialJson, SeriesJson,
};
use crate::{svg, CliError};

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let data = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&data)
        .map_err(|e| CliError::input(format!("cannot parse {}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// snf
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SnfOutput {
    pub factors: Vec<String>,
    pub ord_det: String,
}

pub fn cmd_snf(matrix_path: &Path, precision: &Rational) -> Result<SnfOutput, CliError> {
    let mj: MatrixJson = read_json(matrix_path)?;
    let a = mj.to_core()?;
    let snf = invariant_factors_elimination(&a, precision)?;
    let ord_det = snf
        .factors
        .iter()
        .fold(Rational::from_integer(0.into()), |s, q| s + q);
    Ok(SnfOutput {
        factors: snf.factors.iter().map(rational_string).collect(),
        ord_det: rational_string(&ord_det),
    })
}

// ---------------------------------------------------------------------------
// trop-point
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TropPointOutput {
    pub model: String,
    pub value: Vec<String>,
}

pub fn cmd_trop_point(model_name: &str, point_path: &Path) -> Result<TropPointOutput, CliError> {
    let model = parse_model(model_name)?;
    let pj: PointJson = read_json(point_path)?;
    let point = pj.to_core(&model)?;
    let v = model_tropicalize(&model, &point)?;
    Ok(TropPointOutput {
        model: model_name.to_string(),
        value: v.iter().map(rational_string).collect(),
    })
}

// ---------------------------------------------------------------------------
// gfan
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct GfanConeOutput {
    pub normals: Vec<Vec<String>>,
    pub relations: Vec<String>,
    pub dim: i64,
    pub initial_ideal: Vec<PolynomialJson>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct GfanOutput {
    pub vars: Vec<String>,
    pub cones: Vec<GfanConeOutput>,
    pub adjacency: Vec<(usize, usize)>,
}

pub fn cmd_gfan(ideal_path: &Path) -> Result<GfanOutput, CliError> {
    let ij: IdealJson = read_json(ideal_path)?;
    let gens = ij.to_rational_gens()?;
    let fan = groebner_fan_enumerate(&gens)?;
    let cones = fan
        .cones
        .iter()
        .map(|fc| {
            let mut normals = Vec::new();
            let mut relations = Vec::new();
            for h in fc.cone.halfspaces() {
                normals.push(h.normal.iter().map(rational_string).collect());
                relations.push(match h.rel {
                    Rel::Ge => ">=0".to_string(),
                    Rel::Eq => "=0".to_string(),
                });
            }
            GfanConeOutput {
                normals,
                relations,
                dim: fc.cone.dim(),
                initial_ideal: fc
                    .initial_ideal
                    .iter()
                    .map(|p| PolynomialJson::from_rational_poly(&ij.vars, p))
                    .collect(),
            }
        })
        .collect();
    Ok(GfanOutput {
        vars: ij.vars.clone(),
        cones,
        adjacency: fan.adjacency.clone(),
    })
}

// ---------------------------------------------------------------------------
// trop
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TropGridResult {
    pub weight: Vec<String>,
    pub membership: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TropOutput {
    /// Tropical hypersurface of each generator as a union of pieces.
    pub hypersurfaces: Vec<Vec<PieceJson>>,
    pub grid: Vec<TropGridResult>,
}

pub fn cmd_trop(ideal_path: &Path, grid_path: Option<&Path>) -> Result<TropOutput, CliError> {
    let ij: IdealJson = read_json(ideal_path)?;
    let series_gens = ij.to_series_gens()?;
    let mut hypersurfaces = Vec::new();
    for g in &series_gens {
        if g.is_zero() {
            continue;
        }
        let ts = trop_hypersurface(g)?;
        hypersurfaces.push(ts.pieces().iter().map(PieceJson::from_core).collect());
    }
    let mut grid_results = Vec::new();
    if let Some(gp) = grid_path {
        let gj: GridJson = read_json(gp)?;
        let weights = gj.to_weights()?;
        // membership is defined for constant-coefficient ideals
        let gens = ij.to_rational_gens().map_err(|_| {
            CliError::input("grid membership needs constant (rational) coefficients")
        })?;
        for w in weights {
            let membership = trop_membership(&gens, &w)?;
            grid_results.push(TropGridResult {
                weight: w.iter().map(rational_string).collect(),
                membership,
            });
        }
    }
    Ok(TropOutput {
        hypersurfaces,
        grid: grid_results,
    })
}

// ---------------------------------------------------------------------------
// sph-trop
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum SphTropOutput {
    Sl2 {
        chart_b: String,
        chart_b_minus: String,
        combined: String,
        degree_span: (i64, i64),
    },
    Gl2 {
        pieces: Vec<PieceJson>,
    },
}

pub fn cmd_sph_trop(example: &str, input_path: &Path) -> Result<SphTropOutput, CliError> {
    let pj: PolynomialJson = read_json(input_path)?;
    let f = pj.to_rational_poly()?;
    match example {
        "sl2" => {
            let r = sl2_trop_hypersurface(&f)?;
            Ok(SphTropOutput::Sl2 {
                chart_b: r.chart_b.to_string(),
                chart_b_minus: r.chart_b_minus.to_string(),
                combined: r.combined.to_string(),
                degree_span: r.degree_span,
            })
        }
        "gl2" => {
            let set = gl2_borel_trop(&f)?;
            Ok(SphTropOutput::Gl2 {
                pieces: set.pieces().iter().map(PieceJson::from_core).collect(),
            })
        }
        other => Err(CliError::input(format!(
            "unknown example {other:?} (expected sl2 or gl2)"
        ))),
    }
}

// ---------------------------------------------------------------------------
// sph-gb
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SphGbOutput {
    pub basis: Vec<PolynomialJson>,
    pub initial_ideal: Vec<PolynomialJson>,
}

pub fn cmd_sph_gb(ideal_path: &Path) -> Result<SphGbOutput, CliError> {
    let ij: IdealJson = read_json(ideal_path)?;
    if ij.vars.len() != 2 {
        return Err(CliError::input(
            "the spherical basis lives on the plane: exactly two variables",
        ));
    }
    let gens = ij.to_rational_gens()?;
    let gb = sl2_spherical_gb(&gens)?;
    Ok(SphGbOutput {
        basis: gb
            .basis
            .iter()
            .map(|p| PolynomialJson::from_rational_poly(&ij.vars, p))
            .collect(),
        initial_ideal: gb
            .initial_ideal
            .iter()
            .map(|p| PolynomialJson::from_rational_poly(&ij.vars, p))
            .collect(),
    })
}

// ---------------------------------------------------------------------------
// svd-limit
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct LimitRowOutput {
    pub t: f64,
    pub log_singular_values: Vec<f64>,
    pub deviation: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SvdLimitOutput {
    pub factors: Vec<String>,
    pub rows: Vec<LimitRowOutput>,
    pub monotone: bool,
    pub final_deviation: f64,
}

pub fn parse_t_list(spec: &str) -> Result<Vec<f64>, CliError> {
    let ts: Result<Vec<f64>, _> = spec.split(',').map(|s| s.trim().parse::<f64>()).collect();
    let ts = ts.map_err(|_| CliError::input(format!("bad t list {spec:?}")))?;
    if ts.iter().any(|&t| !(0.0..1.0).contains(&t) || t == 0.0) {
        return Err(CliError::input("every t must lie in (0, 1)"));
    }
    Ok(ts)
}

pub fn cmd_svd_limit(matrix_path: &Path, ts: &str) -> Result<SvdLimitOutput, CliError> {
    let mj: MatrixJson = read_json(matrix_path)?;
    let a = mj.to_core()?;
    let t_values = parse_t_list(ts)?;
    let report = snf_svd_limit_check(&a, &t_values)?;
    Ok(SvdLimitOutput {
        factors: report.factors.iter().map(rational_string).collect(),
        rows: report
            .rows
            .iter()
            .map(|r| LimitRowOutput {
                t: r.t,
                log_singular_values: r.log_singular_values.clone(),
                deviation: r.deviation,
            })
            .collect(),
        monotone: report.monotone,
        final_deviation: report.final_deviation,
    })
}

// ---------------------------------------------------------------------------
// amoeba
// ---------------------------------------------------------------------------

/// Sample grid: either explicit complex points or a polar grid of radii and
/// equally spaced angles.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AmoebaGridJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<(f64, f64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radii: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub angles: Option<usize>,
}

impl AmoebaGridJson {
    pub fn resolve(&self, t: f64) -> Vec<Complex64> {
        let mut grid = Vec::new();
        if let Some(pts) = &self.points {
            grid.extend(pts.iter().map(|&(re, im)| Complex64::new(re, im)));
        }
        if let Some(radii) = &self.radii {
            let angles = self.angles.unwrap_or(16).max(1);
            for &r in radii {
                for k in 0..angles {
                    let theta = core::f64::consts::TAU * (k as f64) / (angles as f64);
                    grid.push(Complex64::from_polar(r, theta));
                }
            }
        }
        if grid.is_empty() {
            // default polar grid: radii t^a for a in -3..=3 by halves
            let mut a = -3.0f64;
            while a <= 3.0 {
                let r = t.powf(a);
                for k in 0..24 {
                    let theta = core::f64::consts::TAU * (k as f64) / 24.0;
                    grid.push(Complex64::from_polar(r, theta));
                }
                a += 0.5;
            }
        }
        grid
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct AmoebaOutput {
    pub model: String,
    pub t: f64,
    pub points: usize,
    pub skipped: usize,
    pub csv: String,
    pub svg: String,
}

fn cloud_csv(cloud: &spherotrop_core::numeric_amoeba::AmoebaCloud) -> String {
    let mut out = String::new();
    let width = cloud.points.first().map(|(_, c)| c.len()).unwrap_or(0);
    out.push_str("s_re,s_im");
    for i in 0..width {
        out.push_str(&format!(",v{i}"));
    }
    out.push('\n');
    for (s, coords) in &cloud.points {
        out.push_str(&format!("{},{}", s.re, s.im));
        for c in coords {
            out.push_str(&format!(",{c}"));
        }
        out.push('\n');
    }
    out
}

pub fn cmd_amoeba(
    model_name: &str,
    family_path: &Path,
    t: f64,
    grid_path: Option<&Path>,
    out_spec: &str,
) -> Result<AmoebaOutput, CliError> {
    if !(t > 0.0 && t < 1.0) {
        return Err(CliError::input("t must lie in (0, 1)"));
    }
    let model = parse_model(model_name)?;
    let fj: FamilyJson = read_json(family_path)?;
    let family: ModelFamily = fj.to_core(&model)?;
    let grid_spec: AmoebaGridJson = match grid_path {
        Some(p) => read_json(p)?,
        None => AmoebaGridJson {
            points: None,
            radii: None,
            angles: None,
        },
    };
    let grid = grid_spec.resolve(t);
    let cloud = amoeba_sample(&model, &family, t, &grid)?;

    let mut csv_path = String::new();
    let mut svg_path = String::new();
    for part in out_spec.split(',') {
        let part = part.trim();
        if part.ends_with(".csv") {
            fs::write(part, cloud_csv(&cloud))?;
            csv_path = part.to_string();
        } else if part.ends_with(".svg") {
            fs::write(part, svg::render_cloud(&model, &cloud))?;
            svg_path = part.to_string();
        } else if !part.is_empty() {
            return Err(CliError::input(format!(
                "output {part:?} must end in .csv or .svg"
            )));
        }
    }
    Ok(AmoebaOutput {
        model: model_name.to_string(),
        t,
        points: cloud.points.len(),
        skipped: cloud.skipped,
        csv: csv_path,
        svg: svg_path,
    })
}

// ---------------------------------------------------------------------------
// check-fundamental
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct CurveResultOutput {
    pub trop: Vec<String>,
    pub membership: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct GridResultOutput {
    pub weight: Vec<String>,
    pub membership: bool,
    pub on_all_hypersurfaces: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckFundamentalOutput {
    pub pass: bool,
    pub curves: Vec<CurveResultOutput>,
    pub grid: Vec<GridResultOutput>,
}

/// `{"curves": [[series, ...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurvesJson {
    pub curves: Vec<Vec<SeriesJson>>,
}

/// The bundled example: the line `x + y + 1` with a battery of monomial
/// curves and an integer grid.
pub fn bundled_line_ideal() -> Vec<Polynomial<Rational>> {
    use spherotrop_core::exact_arith::rat_int;
    use spherotrop_core::poly_engine::RingMode;
    vec![Polynomial::from_terms(
        2,
        RingMode::Laurent,
        [
            (vec![1, 0], rat_int(1)),
            (vec![0, 1], rat_int(1)),
            (vec![0, 0], rat_int(1)),
        ],
    )]
}

pub fn bundled_line_curves(count: usize, seed: u64) -> Vec<TorusPoint> {
    use rand::Rng;
    use rand::SeedableRng;
    use spherotrop_core::exact_arith::{rat_int, PuiseuxSeries};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut curves = Vec::with_capacity(count);
    while curves.len() < count {
        // gamma_1 random exact series, gamma_2 = -1 - gamma_1
        let nterms = rng.gen_range(1..3usize);
        let g1 = PuiseuxSeries::from_terms(
            rng.gen_range(1..3u64),
            (0..nterms).map(|_| (rng.gen_range(-4..7i64), rat_int(rng.gen_range(1..5i64)))),
            spherotrop_core::exact_arith::Truncation::Exact,
        );
        let g2 = &(&PuiseuxSeries::constant(rat_int(-1)) - &g1);
        if g1.is_zero() || g2.is_zero() {
            continue;
        }
        curves.push(vec![g1, g2.clone()]);
    }
    curves
}

pub fn bundled_integer_grid(half_width: i64) -> Vec<Vec<Rational>> {
    use spherotrop_core::exact_arith::rat_int;
    let mut grid = Vec::new();
    for a in -half_width..=half_width {
        for b in -half_width..=half_width {
            grid.push(vec![rat_int(a), rat_int(b)]);
        }
    }
    grid
}

pub fn cmd_check_fundamental(
    ideal_path: Option<&Path>,
    curves_path: Option<&Path>,
    grid_path: Option<&Path>,
    precision: &Rational,
    seed: u64,
) -> Result<CheckFundamentalOutput, CliError> {
    let gens = match ideal_path {
        Some(p) => {
            let ij: IdealJson = read_json(p)?;
            ij.to_rational_gens()?
        }
        None => bundled_line_ideal(),
    };
    let curves: Vec<TorusPoint> = match curves_path {
        Some(p) => {
            let cj: CurvesJson = read_json(p)?;
            cj.curves
                .iter()
                .map(|c| c.iter().map(|s| s.to_core()).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()?
        }
        None if ideal_path.is_none() => bundled_line_curves(8, seed),
        None => Vec::new(),
    };
    let grid = match grid_path {
        Some(p) => {
            let gj: GridJson = read_json(p)?;
            gj.to_weights()?
        }
        None => bundled_integer_grid(3),
    };
    let report = fundamental_check(&gens, &curves, &grid, precision)?;
    let out = CheckFundamentalOutput {
        pass: report.pass,
        curves: report
            .curves
            .iter()
            .map(|c| CurveResultOutput {
                trop: c.trop.iter().map(rational_string).collect(),
                membership: c.membership,
            })
            .collect(),
        grid: report
            .grid
            .iter()
            .map(|g| GridResultOutput {
                weight: g.weight.iter().map(rational_string).collect(),
                membership: g.membership,
                on_all_hypersurfaces: g.on_all_hypersurfaces,
            })
            .collect(),
    };
    Ok(out)
}

// ---------------------------------------------------------------------------
// shared ideal helper for examples in tests
// ---------------------------------------------------------------------------

/// Convenience constructor mirroring the JSON ideal schema.
pub fn ideal_from_rational_gens(
    vars: &[&str],
    mode: &str,
    gens: &[Polynomial<Rational>],
) -> IdealJson {
    IdealJson {
        vars: vars.iter().map(|s| s.to_string()).collect(),
        mode: mode.to_string(),
        gens: gens
            .iter()
            .map(|p| {
                PolynomialJson::from_rational_poly(
                    &vars.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    p,
                )
                .terms
            })
            .collect(),
    }
}
