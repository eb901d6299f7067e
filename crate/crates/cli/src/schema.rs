//! JSON equation specs.
//!
//! ```json
//! {"type":"linear","order":1,"coeffs":[[[1,"1"]],[[0,"1"]]],"c0":[]}
//! {"type":"nonlinear","m":1,"coeffs":[[],[],[[0,"1"]]]}
//! {"type":"const_linear","a":["1","0"]}
//! {"type":"const_nonlinear","m":1,"a":["0","1"],"b0":"0"}
//! ```
//!
//! Coefficient lists are indexed by derivative order (linear) or by power of
//! `z` (nonlinear); each entry lists `[power of t, "p/q"]` monomials.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;
use umbral::{
    format_rational, parse_rational, ConstLinearEq, ConstNonlinearOde, LinearOde, NonlinearOde,
    PolyCoeff, Rational,
};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("schema error at {path}: {message}")]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl SchemaError {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            path: path.into(),
            message: message.into(),
        }
    }
}

type Monomials = Vec<(usize, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearDoc {
    pub order: usize,
    pub coeffs: Vec<Monomials>,
    #[serde(default)]
    pub c0: Monomials,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NonlinearDoc {
    pub m: usize,
    pub coeffs: Vec<Monomials>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstLinearDoc {
    pub a: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstNonlinearDoc {
    pub m: usize,
    pub a: Vec<String>,
    pub b0: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SpecDoc {
    Linear(LinearDoc),
    Nonlinear(NonlinearDoc),
    ConstLinear(ConstLinearDoc),
    ConstNonlinear(ConstNonlinearDoc),
}

/// A validated equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equation {
    Linear(LinearOde),
    Nonlinear(NonlinearOde),
    ConstLinear(ConstLinearEq),
    ConstNonlinear(ConstNonlinearOde),
}

fn rational_at(s: &str, path: String) -> Result<Rational, SchemaError> {
    parse_rational(s).map_err(|_| SchemaError::new(path, format!("not a rational: {s:?}")))
}

fn poly_at(monos: &Monomials, path: &str) -> Result<PolyCoeff, SchemaError> {
    let terms = monos
        .iter()
        .enumerate()
        .map(|(i, (m, a))| Ok((*m, rational_at(a, format!("{path}[{i}][1]"))?)))
        .collect::<Result<Vec<_>, SchemaError>>()?;
    Ok(PolyCoeff::new(terms))
}

fn polys_at(coeffs: &[Monomials], path: &str) -> Result<Vec<PolyCoeff>, SchemaError> {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| poly_at(c, &format!("{path}[{i}]")))
        .collect()
}

fn rationals_at(values: &[String], path: &str) -> Result<Vec<Rational>, SchemaError> {
    values
        .iter()
        .enumerate()
        .map(|(i, s)| rational_at(s, format!("{path}[{i}]")))
        .collect()
}

impl SpecDoc {
    pub fn validate(&self) -> Result<Equation, SchemaError> {
        match self {
            SpecDoc::Linear(LinearDoc { order, coeffs, c0 }) => {
                if *order == 0 {
                    return Err(SchemaError::new("order", "must be ≥ 1"));
                }
                if coeffs.len() != order + 1 {
                    return Err(SchemaError::new(
                        "coeffs",
                        format!("expected {} entries a_0..a_N, got {}", order + 1, coeffs.len()),
                    ));
                }
                let polys = polys_at(coeffs, "coeffs")?;
                if polys[*order].is_zero() {
                    return Err(SchemaError::new(format!("coeffs[{order}]"), "leading coefficient a_N is empty"));
                }
                let c0 = poly_at(c0, "c0")?;
                let eq = LinearOde::new(polys, c0).map_err(|e| SchemaError::new("$", e.to_string()))?;
                Ok(Equation::Linear(eq))
            }
            SpecDoc::Nonlinear(NonlinearDoc { m, coeffs }) => {
                if *m == 0 {
                    return Err(SchemaError::new("m", "must be ≥ 1"));
                }
                if coeffs.is_empty() {
                    return Err(SchemaError::new("coeffs", "expected at least a_0"));
                }
                let polys = polys_at(coeffs, "coeffs")?;
                let eq = NonlinearOde::new(*m, polys).map_err(|e| SchemaError::new("$", e.to_string()))?;
                Ok(Equation::Nonlinear(eq))
            }
            SpecDoc::ConstLinear(ConstLinearDoc { a }) => {
                if a.is_empty() {
                    return Err(SchemaError::new("a", "expected a_0..a_{N-1} with N ≥ 1"));
                }
                let eq = ConstLinearEq::new(rationals_at(a, "a")?).map_err(|e| SchemaError::new("a", e.to_string()))?;
                Ok(Equation::ConstLinear(eq))
            }
            SpecDoc::ConstNonlinear(ConstNonlinearDoc { m, a, b0 }) => {
                if *m == 0 {
                    return Err(SchemaError::new("m", "must be ≥ 1"));
                }
                let a = rationals_at(a, "a")?;
                let b0 = rational_at(b0, "b0".into())?;
                let eq = ConstNonlinearOde::new(*m, a, b0).map_err(|e| SchemaError::new("$", e.to_string()))?;
                Ok(Equation::ConstNonlinear(eq))
            }
        }
    }
}

fn monomials_of(p: &PolyCoeff) -> Monomials {
    p.monomials().iter().map(|(m, a)| (*m, format_rational(a))).collect()
}

impl From<&Equation> for SpecDoc {
    fn from(eq: &Equation) -> Self {
        match eq {
            Equation::Linear(e) => SpecDoc::Linear(LinearDoc {
                order: e.order(),
                coeffs: e.coeffs().iter().map(monomials_of).collect(),
                c0: monomials_of(e.c0()),
            }),
            Equation::Nonlinear(e) => SpecDoc::Nonlinear(NonlinearDoc {
                m: e.deriv_order(),
                coeffs: e.coeffs().iter().map(monomials_of).collect(),
            }),
            Equation::ConstLinear(e) => SpecDoc::ConstLinear(ConstLinearDoc {
                a: e.coeffs().iter().map(format_rational).collect(),
            }),
            Equation::ConstNonlinear(e) => SpecDoc::ConstNonlinear(ConstNonlinearDoc {
                m: e.deriv_order(),
                a: e.coeffs().iter().map(format_rational).collect(),
                b0: format_rational(e.b0()),
            }),
        }
    }
}

fn body<T: DeserializeOwned>(v: Value) -> Result<T, SchemaError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        SchemaError::new(path, e.into_inner().to_string())
    })
}

/// Parses a spec document without validating its contents.
pub fn parse_doc(text: &str) -> Result<SpecDoc, SchemaError> {
    let mut v: Value = serde_json::from_str(text).map_err(|e| SchemaError::new("$", e.to_string()))?;
    let Some(obj) = v.as_object_mut() else {
        return Err(SchemaError::new("$", "expected a JSON object"));
    };
    let ty = match obj.remove("type") {
        Some(Value::String(t)) => t,
        _ => return Err(SchemaError::new("type", "missing or not a string")),
    };
    match ty.as_str() {
        "linear" => Ok(SpecDoc::Linear(body(v)?)),
        "nonlinear" => Ok(SpecDoc::Nonlinear(body(v)?)),
        "const_linear" => Ok(SpecDoc::ConstLinear(body(v)?)),
        "const_nonlinear" => Ok(SpecDoc::ConstNonlinear(body(v)?)),
        other => Err(SchemaError::new("type", format!("unknown equation type {other:?}"))),
    }
}

/// Parses and validates a spec document.
pub fn parse_spec(text: &str) -> Result<Equation, SchemaError> {
    parse_doc(text)?.validate()
}

/// Canonical JSON for a validated equation.
pub fn serialize_spec(eq: &Equation) -> String {
    serde_json::to_string(&SpecDoc::from(eq)).expect("spec documents always serialize")
}
