//! JSON disk-collection documents.
//!
//! ```json
//! {"disks": [{"center": [0, 0], "radius": 1}, {"center": ["2", "1/3"], "radius": "1/2"}],
//!  "metadata": {"label": "example"}}
//! ```
//!
//! Numbers may be JSON numbers or strings holding an integer, a decimal literal
//! or a fraction `p/q`. Exact mode takes strings and integer JSON numbers only,
//! since a JSON float has already been rounded to binary.

use std::collections::BTreeMap;

use diskpos_core::exact::{GaussianRational, RationalDiskCollection};
use diskpos_core::numeric::{parse_rational, to_f64};
use diskpos_core::DiskCollection;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    disks: Vec<RawDisk>,
    #[serde(default)]
    metadata: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDisk {
    center: [RawNumber; 2],
    radius: RawNumber,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawNumber {
    Number(serde_json::Number),
    Text(String),
}

/// A parsed document; values are kept exact until a mode is chosen.
#[derive(Debug, Clone)]
pub struct CollectionDocument {
    pub centers: Vec<(BigRational, BigRational)>,
    pub radii: Vec<BigRational>,
    pub metadata: BTreeMap<String, String>,
    first_inexact: Option<String>,
}

fn convert(raw: &RawNumber, field: &str, first: &mut Option<String>) -> Result<BigRational, String> {
    match raw {
        RawNumber::Text(t) => parse_rational(t).ok_or_else(|| format!("{field}: cannot read \"{t}\" as a number")),
        RawNumber::Number(n) => {
            if let Some(i) = n.as_i64() {
                return Ok(BigRational::from_integer(i.into()));
            }
            if let Some(u) = n.as_u64() {
                return Ok(BigRational::from_integer(u.into()));
            }
            let v = n.as_f64().ok_or_else(|| format!("{field}: unsupported number {n}"))?;
            let q = BigRational::from_float(v).ok_or_else(|| format!("{field}: non-finite number {n}"))?;
            first.get_or_insert_with(|| field.to_string());
            Ok(q)
        }
    }
}

impl CollectionDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| format!("invalid document: {e}"))?;
        if raw.disks.is_empty() {
            return Err("disks: the list is empty; at least one disk is required".into());
        }
        let mut first = None;
        let mut centers = Vec::with_capacity(raw.disks.len());
        let mut radii = Vec::with_capacity(raw.disks.len());
        for (i, d) in raw.disks.iter().enumerate() {
            let re = convert(&d.center[0], &format!("disks[{i}].center[0]"), &mut first)?;
            let im = convert(&d.center[1], &format!("disks[{i}].center[1]"), &mut first)?;
            let r = convert(&d.radius, &format!("disks[{i}].radius"), &mut first)?;
            if r <= BigRational::from_integer(0.into()) {
                return Err(format!("disks[{i}].radius: must be positive, got {r}"));
            }
            if let Some(j) = centers.iter().position(|c| *c == (re.clone(), im.clone())) {
                return Err(format!("disks[{i}].center: coincides with disks[{j}].center"));
            }
            centers.push((re, im));
            radii.push(r);
        }
        Ok(Self { centers, radii, metadata: raw.metadata, first_inexact: first })
    }

    pub fn floating(&self) -> Result<DiskCollection, String> {
        DiskCollection::new(
            self.centers.iter().map(|(re, im)| Complex64::new(to_f64(re), to_f64(im))).collect(),
            self.radii.iter().map(to_f64).collect(),
        )
        .map_err(|e| e.to_string())
    }

    pub fn exact(&self) -> Result<RationalDiskCollection, String> {
        if let Some(field) = &self.first_inexact {
            return Err(format!(
                "{field}: exact mode needs strings such as \"1/3\" or integers, not floating-point JSON numbers"
            ));
        }
        RationalDiskCollection::new(
            self.centers.iter().map(|(re, im)| GaussianRational::new(re.clone(), im.clone())).collect(),
            self.radii.clone(),
        )
        .map_err(|e| e.to_string())
    }
}
