//! JSON documents for complexes, posets and point configurations.
//!
//! Complex: `{"vertices": [...], "facets": [[...], ...]}` with `vertices`
//! optional. Poset: `{"elements": [...], "covers": [[a, b], ...]}`. Point
//! configurations are described in [`crate::filtered::PointConfiguration`].
//! Labels are JSON integers or strings. Unknown keys are ignored.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::filtered::PointConfiguration;
use crate::label::Label;
use crate::posets::FinitePoset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Label>>,
    pub facets: Vec<Vec<Label>>,
}

impl ComplexDocument {
    pub fn from_complex(complex: &SimplicialComplex) -> Self {
        Self {
            vertices: Some(complex.vertices().to_vec()),
            facets: complex.facet_labels(),
        }
    }

    pub fn into_complex(self) -> Result<SimplicialComplex> {
        match self.vertices {
            Some(v) => SimplicialComplex::with_vertices(&v, &self.facets),
            None => Ok(SimplicialComplex::from_facets(self.facets)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub elements: Vec<Label>,
    #[serde(default)]
    pub covers: Vec<(Label, Label)>,
}

impl PosetDocument {
    pub fn from_poset(poset: &FinitePoset) -> Self {
        Self {
            elements: poset.labels().to_vec(),
            covers: poset.cover_labels(),
        }
    }

    pub fn into_poset(self) -> Result<FinitePoset> {
        FinitePoset::from_covers(self.elements, &self.covers)
    }
}

/// Parses JSON, reporting syntax and shape errors with line and column.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    from_json::<ComplexDocument>(text)?.into_complex()
}

pub fn complex_to_json(complex: &SimplicialComplex) -> String {
    to_json(&ComplexDocument::from_complex(complex))
}

pub fn poset_from_json(text: &str) -> Result<FinitePoset> {
    from_json::<PosetDocument>(text)?.into_poset()
}

pub fn points_from_json(text: &str) -> Result<PointConfiguration> {
    let config: PointConfiguration = from_json(text)?;
    config.validate()?;
    Ok(config)
}

/// Pretty JSON with object keys sorted, so equal values print identically.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("documents serialize to JSON");
    serde_json::to_string_pretty(&value).expect("JSON values print")
}
