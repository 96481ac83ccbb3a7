//! JSON input format: a concrete basis of vector fields given by coefficient
//! strings, an abstract pair given by a structure tensor plus h coordinates,
//! or both. All numbers are exact strings `p` or `p/q`; no floats anywhere.

use lievf::structure::{StructureConstants, SubalgebraSpec, VectorFieldAlgebra};
use lievf::symbolic::{parse_rational, Rational, Vars};
use lievf::vector_fields::Chart;
use lievf::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct AlgebraInput {
    #[serde(default)]
    pub variables: Vec<String>,
    /// one coefficient-string vector per basis field
    #[serde(default)]
    pub fields: Vec<Vec<String>>,
    #[serde(default, rename = "abstract")]
    pub abstract_pair: Option<AbstractPairInput>,
    #[serde(default)]
    pub meta: Meta,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct AbstractPairInput {
    /// `c[i][j][k]` as exact strings
    pub tensor: Vec<Vec<Vec<String>>>,
    /// coordinate vectors spanning h
    pub h: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
pub struct Meta {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub expected: Option<Expected>,
}

/// Expected analysis results carried by catalog entries.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
pub struct Expected {
    #[serde(default)]
    pub transitive: Option<bool>,
    #[serde(default)]
    pub dims: Option<ExpectedDims>,
    #[serde(default)]
    pub effective: Option<bool>,
    #[serde(default)]
    pub primitive: Option<bool>,
    #[serde(default)]
    pub morozov: Option<String>,
    /// "curve" | "affine" | "out-of-scope" | "error"
    #[serde(default)]
    pub normalize_mode: Option<String>,
    #[serde(default)]
    pub complete: Option<bool>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
pub struct ExpectedDims {
    pub g: usize,
    pub h: usize,
    pub normalizer: usize,
    pub zero_locus_tangent: usize,
    pub centralizer: usize,
}

impl AlgebraInput {
    pub fn from_json(text: &str) -> Result<Self> {
        let input: AlgebraInput = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("malformed input JSON: {e}")))?;
        input.validate()?;
        Ok(input)
    }

    fn validate(&self) -> Result<()> {
        if self.fields.is_empty() && self.abstract_pair.is_none() {
            return Err(Error::Invalid(
                "input needs either concrete `fields` or an `abstract` tensor".into(),
            ));
        }
        if !self.fields.is_empty() && self.variables.is_empty() {
            return Err(Error::Invalid(
                "concrete fields need a `variables` list".into(),
            ));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        self.meta.name.as_deref().unwrap_or("unnamed")
    }

    pub fn has_fields(&self) -> bool {
        !self.fields.is_empty()
    }

    pub fn chart(&self) -> Result<Chart> {
        if self.variables.is_empty() {
            return Err(Error::Invalid("no variables declared".into()));
        }
        Ok(Chart::new(Vars::new(self.variables.clone())))
    }

    pub fn algebra(&self) -> Result<VectorFieldAlgebra> {
        let chart = self.chart()?;
        let rows: Vec<Vec<&str>> = self
            .fields
            .iter()
            .map(|f| f.iter().map(String::as_str).collect())
            .collect();
        VectorFieldAlgebra::parse(&chart, &rows)
    }

    pub fn abstract_structure(&self) -> Result<Option<(StructureConstants, SubalgebraSpec)>> {
        let Some(pair) = &self.abstract_pair else {
            return Ok(None);
        };
        let tensor = pair
            .tensor
            .iter()
            .map(|plane| {
                plane
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| parse_entry(s))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let s = StructureConstants::new(tensor)?;
        let h_vecs = pair
            .h
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| parse_entry(x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let h = SubalgebraSpec::new(&s, &h_vecs)?;
        Ok(Some((s, h)))
    }
}

fn parse_entry(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::Invalid(format!("bad rational literal `{s}`")))
}
