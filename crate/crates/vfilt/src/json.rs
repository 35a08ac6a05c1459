//! Wire formats. Rationals travel as strings, `"3"` or `"-5/2"`; on input
//! plain JSON integers are accepted too.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use vfilt_core::bfun::{AffineBFamily, BFunction};
use vfilt_core::filtration::{FdfMatrices, GrVReport, PFunction, PiSets};
use vfilt_core::ratpoly::{int, parse_rational, DensePoly, Matrix, Rational, RootPoly};
use vfilt_core::spaces::{TaggedWeight, WeightSet};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Q;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
                parse_rational(v).map(Q).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
                Ok(Q(int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
                i64::try_from(v).map(|v| Q(int(v))).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

fn qs(v: &[Rational]) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

fn unq(v: Vec<Q>) -> Vec<Rational> {
    v.into_iter().map(|q| q.0).collect()
}

/// Roots in ascending order with multiplicities.
pub type RootPolyJson = Vec<(Q, u32)>;

pub fn root_poly_json(p: &RootPoly) -> RootPolyJson {
    p.roots().iter().map(|(r, m)| (Q(r.clone()), *m)).collect()
}

pub fn root_poly_from_json(j: RootPolyJson) -> RootPoly {
    RootPoly::from_roots(j.into_iter().map(|(q, m)| (q.0, m)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BFunctionJson {
    pub text: String,
    pub roots: RootPolyJson,
}

impl From<&BFunction> for BFunctionJson {
    fn from(b: &BFunction) -> Self {
        BFunctionJson { text: b.to_string(), roots: root_poly_json(&b.as_poly()) }
    }
}

impl BFunctionJson {
    pub fn to_bfunction(&self) -> BFunction {
        BFunction::from_poly(&root_poly_from_json(self.roots.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PFunctionJson {
    pub alpha: Q,
    pub b: BFunctionJson,
    pub text: String,
    pub roots: RootPolyJson,
}

impl From<&PFunction> for PFunctionJson {
    fn from(p: &PFunction) -> Self {
        PFunctionJson {
            alpha: Q(p.alpha.clone()),
            b: (&p.b).into(),
            text: p.poly.to_string(),
            roots: root_poly_json(&p.poly),
        }
    }
}

impl PFunctionJson {
    pub fn to_pfunction(&self) -> PFunction {
        PFunction {
            poly: root_poly_from_json(self.roots.clone()),
            b: self.b.to_bfunction(),
            alpha: self.alpha.0.clone(),
        }
    }
}

/// Coefficients from the constant term up.
pub fn dense_json(p: &DensePoly) -> Vec<Q> {
    qs(p.coeffs())
}

pub fn matrix_json(m: &Matrix) -> Vec<Vec<Q>> {
    m.to_rows().iter().map(|r| qs(r)).collect()
}

/// The family document. `sigma_index` counts generators from 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub name: String,
    pub dim: u32,
    pub d: usize,
    pub generators: usize,
    pub degrees: Vec<u32>,
    pub sigma_index: usize,
    pub r: Vec<Q>,
    pub c: Vec<Vec<Q>>,
}

impl From<&AffineBFamily> for FamilyJson {
    fn from(f: &AffineBFamily) -> Self {
        FamilyJson {
            name: f.name.clone(),
            dim: f.dim,
            d: f.d,
            generators: f.generators(),
            degrees: f.degrees.clone(),
            sigma_index: f.sigma_index + 1,
            r: qs(&f.r),
            c: f.c.iter().map(|row| qs(row)).collect(),
        }
    }
}

impl FamilyJson {
    /// Schema-level checks only; [`AffineBFamily::validate`] does the rest.
    pub fn into_family(self) -> Result<AffineBFamily> {
        if self.degrees.len() != self.generators {
            return Err(CliError::Usage(format!(
                "family lists {} degrees for {} generators",
                self.degrees.len(),
                self.generators
            )));
        }
        if self.sigma_index == 0 || self.sigma_index > self.generators {
            return Err(CliError::Usage(format!(
                "sigma_index {} must lie in 1..={}",
                self.sigma_index, self.generators
            )));
        }
        Ok(AffineBFamily {
            name: self.name,
            dim: self.dim,
            d: self.d,
            degrees: self.degrees,
            sigma_index: self.sigma_index - 1,
            r: unq(self.r),
            c: self.c.into_iter().map(unq).collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiSetsJson {
    pub r_lambda: i64,
    pub pi: BTreeMap<String, Vec<i64>>,
}

impl PiSetsJson {
    pub fn into_pi_sets(self) -> Result<PiSets> {
        let mut pi = BTreeMap::new();
        for (k, ls) in self.pi {
            let k: i64 = k.trim().parse().map_err(|_| CliError::Usage(format!("Π key {k:?} is not an integer")))?;
            pi.insert(k, ls.into_iter().collect::<BTreeSet<_>>());
        }
        Ok(PiSets { r_lambda: self.r_lambda, pi })
    }
}

impl From<&PiSets> for PiSetsJson {
    fn from(p: &PiSets) -> Self {
        let pi = p.pi.iter().map(|(k, v)| (k.to_string(), v.iter().copied().collect())).collect();
        PiSetsJson { r_lambda: p.r_lambda, pi }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimaryComponent {
    pub t: usize,
    pub exponent: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSetJson {
    pub constraints: Vec<String>,
    pub weights: Vec<Vec<i64>>,
    pub primary_decomposition: Option<Vec<PrimaryComponent>>,
}

impl From<&WeightSet> for WeightSetJson {
    fn from(w: &WeightSet) -> Self {
        WeightSetJson {
            constraints: w.constraints.clone(),
            weights: w.weights.clone(),
            primary_decomposition: w
                .primary_decomposition
                .as_ref()
                .map(|v| v.iter().map(|&(t, exponent)| PrimaryComponent { t, exponent }).collect()),
        }
    }
}

impl From<WeightSetJson> for WeightSet {
    fn from(w: WeightSetJson) -> Self {
        WeightSet {
            constraints: w.constraints,
            weights: w.weights,
            primary_decomposition: w
                .primary_decomposition
                .map(|v| v.into_iter().map(|c| (c.t, c.exponent)).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrVEntryJson {
    pub weight: Vec<i64>,
    pub nu: usize,
    pub exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrVReportJson {
    pub alpha: Q,
    pub level: i64,
    pub entries: Vec<GrVEntryJson>,
}

impl From<&GrVReport> for GrVReportJson {
    fn from(r: &GrVReport) -> Self {
        GrVReportJson {
            alpha: Q(r.alpha.clone()),
            level: r.level,
            entries: r
                .entries
                .iter()
                .map(|e| GrVEntryJson { weight: e.weight.clone(), nu: e.nu, exponent: e.exponent })
                .collect(),
        }
    }
}

/// `λ - α·σ`, written as the integer weight `λ` and the rational `α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedWeightJson {
    pub weight: Vec<i64>,
    pub alpha: Q,
}

impl From<&TaggedWeight> for TaggedWeightJson {
    fn from(t: &TaggedWeight) -> Self {
        TaggedWeightJson { weight: t.weight.clone(), alpha: Q(t.alpha.clone()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FdfJson {
    pub rho: usize,
    pub nu: usize,
    pub mu: usize,
    pub c: Vec<Q>,
    pub f: Vec<Vec<Q>>,
    pub df: Vec<Vec<Q>>,
}

impl From<&FdfMatrices> for FdfJson {
    fn from(m: &FdfMatrices) -> Self {
        FdfJson {
            rho: m.rho,
            nu: m.nu,
            mu: m.mu,
            c: qs(&m.c),
            f: matrix_json(&m.f),
            df: matrix_json(&m.df),
        }
    }
}
