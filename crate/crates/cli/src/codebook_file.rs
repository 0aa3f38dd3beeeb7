//! JSON codebook files. Words are quaternary digit strings:
//! `(0;0) -> '0'`, `(0;1) -> '1'`, `(1;0) -> '2'`, `(1;1) -> '3'`.

use std::collections::BTreeMap;
use std::path::Path;

use aldkit_core::ald::{Lambda, PairedWord};
use aldkit_core::codes::Codebook;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodebookFile {
    pub schema_version: u32,
    pub n: usize,
    pub lambda: u32,
    pub design_distance: u64,
    pub construction: String,
    pub params: BTreeMap<String, String>,
    pub words: Vec<String>,
}

/// Parses a quaternary digit string.
pub fn parse_word(s: &str) -> CliResult<PairedWord> {
    let digits = s
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0'..='3' => Ok(c as u8 - b'0'),
            _ => Err(CliError::Usage(format!("character {i} of {s:?} is {c:?}, expected a digit 0-3"))),
        })
        .collect::<CliResult<Vec<u8>>>()?;
    Ok(PairedWord::from_nat4(&digits)?)
}

/// `G = (0;0)`, `C = (0;1)`, `T = (1;0)`, `A = (1;1)`.
pub fn to_dna(w: &PairedWord) -> String {
    w.symbols().map(|s| ['G', 'C', 'T', 'A'][s.nat4() as usize]).collect()
}

impl CodebookFile {
    pub fn from_codebook(c: &Codebook) -> CodebookFile {
        CodebookFile {
            schema_version: SCHEMA_VERSION,
            n: c.n,
            lambda: c.lambda.get(),
            design_distance: c.design_distance,
            construction: c.construction.clone(),
            params: c.params.clone(),
            words: c.words().iter().map(PairedWord::to_nat4_string).collect(),
        }
    }

    pub fn to_codebook(&self) -> CliResult<Codebook> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Usage(format!(
                "field schema_version: unsupported value {}, expected {SCHEMA_VERSION}",
                self.schema_version
            )));
        }
        let lambda = Lambda::new(self.lambda).map_err(|e| CliError::Usage(format!("field lambda: {e}")))?;
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let w = parse_word(s).map_err(|e| CliError::Usage(format!("field words[{i}]: {e}")))?;
                if w.len() != self.n {
                    return Err(CliError::Usage(format!("field words[{i}]: length {} but n = {}", w.len(), self.n)));
                }
                Ok(w)
            })
            .collect::<CliResult<Vec<_>>>()?;
        Codebook::new(self.n, lambda, self.design_distance, self.construction.clone(), self.params.clone(), words)
            .map_err(|e| CliError::Usage(format!("field words: {e}")))
    }
}

pub fn parse_codebook(text: &str) -> CliResult<Codebook> {
    let file: CodebookFile = serde_json::from_str(text)
        .map_err(|e| CliError::Usage(format!("line {} column {}: {e}", e.line(), e.column())))?;
    file.to_codebook()
}

pub fn render_codebook(c: &Codebook) -> String {
    let mut s = serde_json::to_string_pretty(&CodebookFile::from_codebook(c)).expect("codebook serialises");
    s.push('\n');
    s
}

pub fn read_codebook(path: &Path) -> CliResult<Codebook> {
    let text = std::fs::read_to_string(path)?;
    parse_codebook(&text).map_err(|e| match e {
        CliError::Usage(msg) => CliError::Usage(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_codebook(path: &Path, c: &Codebook) -> CliResult<()> {
    std::fs::write(path, render_codebook(c))?;
    Ok(())
}
