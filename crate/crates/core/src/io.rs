//! JSON file formats. Element ids are 0-based.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::coords::{ChainedLattice, CoordError, PermVector};
use crate::poset::{Lattice, LatticeError};
use crate::structures::SetSystem;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot tell what {0} describes")]
    UnknownShape(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Coord(#[from] CoordError),
}

/// `{ "size": m, "covers": [[a, b], ...], "chains": [[...], ...] }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub size: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chains: Option<Vec<Vec<usize>>>,
}

impl LatticeFile {
    pub fn from_lattice(l: &Lattice) -> Self {
        LatticeFile {
            size: l.size(),
            covers: l.covers().iter().map(|&(a, b)| [a, b]).collect(),
            chains: None,
        }
    }

    pub fn from_chained(cl: &ChainedLattice) -> Self {
        LatticeFile {
            chains: Some(cl.chains().iter().map(|c| c.elems().to_vec()).collect()),
            ..Self::from_lattice(cl.lattice())
        }
    }

    pub fn lattice(&self) -> Result<Lattice, LatticeError> {
        let pairs: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        Lattice::from_covers(self.size, &pairs)
    }

    /// The lattice together with its chains; fails when `chains` is absent.
    pub fn chained(&self) -> Result<ChainedLattice, IoError> {
        let chains = self
            .chains
            .clone()
            .ok_or_else(|| IoError::UnknownShape("a lattice file without chains".into()))?;
        Ok(ChainedLattice::new(self.lattice()?, chains)?)
    }
}

/// What a JSON document describes, guessed from its keys.
#[derive(Debug, Clone)]
pub enum Document {
    Lattice(LatticeFile),
    Perms(PermVector),
    SetSystem(SetSystem),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        let value: Value = serde_json::from_str(text)?;
        let has = |key: &str| value.get(key).is_some();
        if has("covers") {
            Ok(Document::Lattice(serde_json::from_value(value)?))
        } else if has("perms") {
            Ok(Document::Perms(serde_json::from_value(value)?))
        } else if has("ground") && has("family") {
            Ok(Document::SetSystem(serde_json::from_value(value)?))
        } else {
            Err(IoError::UnknownShape("the input".into()))
        }
    }
}

/// Compact JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}
