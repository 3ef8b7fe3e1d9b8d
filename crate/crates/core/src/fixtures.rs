//! Bundled language packs, compiled into the library.
//!
//! Each pack is a meta-model plus a few models that validate against it.
//! `mini_sysml` has no connector sharing; `mini_bpmn` contains a cluster of
//! four rules that share one start connector.

use thiserror::Error;

use crate::dsl::{parse_metamodel, parse_model, DslError};
use crate::model::{MetaModel, Model};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("UNKNOWN_PACK: no language pack named `{0}`")]
    UnknownPack(String),
    #[error("fixture `{file}` does not load: {source}")]
    Broken {
        file: &'static str,
        source: DslError,
    },
}

/// A fixture document as shipped: file name and text.
#[derive(Debug, Clone, Copy)]
pub struct Source {
    pub file: &'static str,
    pub text: &'static str,
}

struct PackSources {
    name: &'static str,
    metamodel: Source,
    models: &'static [Source],
}

macro_rules! source {
    ($pack:literal, $file:literal) => {
        Source {
            file: $file,
            text: include_str!(concat!("../fixtures/", $pack, "/", $file)),
        }
    };
}

const PACKS: &[PackSources] = &[
    PackSources {
        name: "mini_bpmn",
        metamodel: source!("mini_bpmn", "metamodel.gopprr.json"),
        models: &[
            source!("mini_bpmn", "order_collab.model.json"),
            source!("mini_bpmn", "order_process.model.json"),
        ],
    },
    PackSources {
        name: "mini_sysml",
        metamodel: source!("mini_sysml", "metamodel.gopprr.json"),
        models: &[
            source!("mini_sysml", "bdd_small.model.json"),
            source!("mini_sysml", "ibd_small.model.json"),
        ],
    },
];

/// Names of all bundled packs, sorted.
pub fn pack_names() -> impl Iterator<Item = &'static str> {
    PACKS.iter().map(|p| p.name)
}

#[derive(Debug, Clone)]
pub struct LanguagePack {
    pub name: &'static str,
    pub metamodel: MetaModel,
    pub metamodel_source: Source,
    /// Models keyed by file stem (`ibd_small`, ...), in file-name order.
    pub models: Vec<(&'static str, Model, Source)>,
}

impl LanguagePack {
    pub fn model(&self, stem: &str) -> Option<&Model> {
        self.models
            .iter()
            .find(|(s, _, _)| *s == stem)
            .map(|(_, m, _)| m)
    }
}

fn stem(file: &'static str) -> &'static str {
    file.split('.').next().unwrap_or(file)
}

/// Parses and validates a bundled pack.
pub fn load_pack(name: &str) -> Result<LanguagePack, FixtureError> {
    let sources = PACKS
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| FixtureError::UnknownPack(name.to_string()))?;
    let broken = |file| move |source| FixtureError::Broken { file, source };
    let metamodel =
        parse_metamodel(sources.metamodel.text).map_err(broken(sources.metamodel.file))?;
    let mut models = Vec::new();
    for src in sources.models {
        let m = parse_model(src.text, &metamodel).map_err(broken(src.file))?;
        models.push((stem(src.file), m, *src));
    }
    Ok(LanguagePack {
        name: sources.name,
        metamodel,
        metamodel_source: sources.metamodel,
        models,
    })
}
