//! Self-describing JSON input documents.
//!
//! ```json
//! {"kind":"hyperplanes","ambient_dim":2,"hyperplanes":[{"normal":["1","0"],"offset":"3/2"}]}
//! {"kind":"wiring","wires":3,"events":[{"top":0,"size":2}]}
//! {"kind":"semilattice","ambient_dim":2,"flats":[{"id":0,"dim":2},{"id":1,"dim":1}],"leq":[[0,1]]}
//! ```

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Arrangement, Hyperplane};
use crate::poset::{Flat, FlatId, Semilattice};
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::wiring::{CrossingEvent, ValidatedWiring, WiringDiagram};

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawDocument {
    Hyperplanes { ambient_dim: usize, hyperplanes: Vec<RawHyperplane> },
    Wiring { wires: usize, events: Vec<CrossingEvent> },
    Semilattice { ambient_dim: usize, flats: Vec<RawFlat>, leq: Vec<(i64, i64)> },
}

#[derive(Debug, Serialize, Deserialize)]
struct RawHyperplane {
    normal: Vec<String>,
    offset: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct RawFlat {
    id: i64,
    dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Hyperplanes,
    Wiring,
    Semilattice,
}

impl fmt::Display for DocumentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DocumentKind::Hyperplanes => "hyperplanes",
            DocumentKind::Wiring => "wiring",
            DocumentKind::Semilattice => "semilattice",
        })
    }
}

/// A parsed and validated input.
#[derive(Debug, Clone)]
pub enum InputDocument<S> {
    Hyperplanes(Arrangement<S>),
    Wiring(ValidatedWiring),
    Semilattice(Semilattice),
}

impl<S: Scalar> InputDocument<S> {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        match raw {
            RawDocument::Hyperplanes { ambient_dim, hyperplanes } => {
                let hyperplanes = hyperplanes
                    .into_iter()
                    .enumerate()
                    .map(|(i, h)| parse_hyperplane(i, h))
                    .collect::<Result<Vec<_>>>()?;
                Ok(InputDocument::Hyperplanes(Arrangement::new(ambient_dim, hyperplanes)?))
            }
            RawDocument::Wiring { wires, events } => {
                Ok(InputDocument::Wiring(WiringDiagram { wires, events }.validate()?))
            }
            RawDocument::Semilattice { ambient_dim, flats, leq } => {
                if ambient_dim == 0 {
                    return Err(Error::ZeroAmbientDimension);
                }
                let mut index = HashMap::new();
                for (i, f) in flats.iter().enumerate() {
                    if index.insert(f.id, FlatId(i)).is_some() {
                        return Err(Error::DuplicateFlat(f.id));
                    }
                }
                let lookup = |id: i64| index.get(&id).copied().ok_or(Error::UnknownFlat(id));
                let pairs = leq
                    .iter()
                    .map(|&(x, y)| Ok((lookup(x)?, lookup(y)?)))
                    .collect::<Result<Vec<_>>>()?;
                let flats = flats.iter().map(|f| Flat::abstract_flat(f.dim)).collect();
                Ok(InputDocument::Semilattice(Semilattice::new(ambient_dim, flats, pairs)?))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let raw = match self {
            InputDocument::Hyperplanes(a) => RawDocument::Hyperplanes {
                ambient_dim: a.ambient_dim(),
                hyperplanes: a
                    .hyperplanes()
                    .iter()
                    .map(|h| RawHyperplane {
                        normal: h.normal().iter().map(format_scalar).collect(),
                        offset: format_scalar(h.offset()),
                    })
                    .collect(),
            },
            InputDocument::Wiring(w) => RawDocument::Wiring {
                wires: w.wires(),
                events: w.events().to_vec(),
            },
            InputDocument::Semilattice(l) => RawDocument::Semilattice {
                ambient_dim: l.ambient_dim(),
                flats: l.flats().iter().map(|f| RawFlat { id: f.id.0 as i64, dim: f.dim }).collect(),
                leq: l
                    .ids()
                    .flat_map(|x| l.upper(x).filter(move |&y| y != x).map(move |y| (x.0 as i64, y.0 as i64)))
                    .collect(),
            },
        };
        serde_json::to_string(&raw).expect("documents serialize")
    }

    pub fn kind(&self) -> DocumentKind {
        match self {
            InputDocument::Hyperplanes(_) => DocumentKind::Hyperplanes,
            InputDocument::Wiring(_) => DocumentKind::Wiring,
            InputDocument::Semilattice(_) => DocumentKind::Semilattice,
        }
    }

    /// The intersection semilattice of whatever the document describes.
    pub fn lattice(&self) -> Semilattice {
        match self {
            InputDocument::Hyperplanes(a) => a.build_lattice(),
            InputDocument::Wiring(w) => w.lattice(),
            InputDocument::Semilattice(l) => l.clone(),
        }
    }
}

fn parse_hyperplane<S: Scalar>(index: usize, raw: RawHyperplane) -> Result<Hyperplane<S>> {
    let parse = |text: &str| {
        parse_scalar::<S>(text)
            .ok_or_else(|| Error::Parse(format!("hyperplane {index}: bad rational {text:?}")))
    };
    let normal = raw.normal.iter().map(|t| parse(t)).collect::<Result<Vec<_>>>()?;
    let offset = parse(&raw.offset)?;
    Hyperplane::new(normal, offset).map_err(|_| Error::ZeroNormal(index))
}
