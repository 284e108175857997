//! TOML file formats for codes and certificates.
//!
//! A code file:
//!
//! ```toml
//! name = "a17"
//! q = 2
//! n = 17
//! defining_set = [1, 2, 4, 8, -8, -4, -2, -1]
//! ```
//!
//! or with `generator = [c0, c1, ...]` (GF(q) indices, constant term first)
//! instead of `defining_set`. Negative residues are reduced modulo `n`.
//!
//! A certificate file holds the certificate fields at top level and the
//! codes in `[code_a]` and, for GEN1/GEN2, `[code_b]` tables.

use serde::{Deserialize, Serialize};

use crate::bounds::{verify_certificate, BoundCertificate, Verdict};
use crate::cyclic::{CyclicCode, DefiningSet};
use crate::error::FileError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub q: u64,
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defining_set: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<u64>>,
}

impl CodeSpecFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        toml::from_str(text).map_err(|e| FileError::Parse(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plain data serializes")
    }

    pub fn to_code(&self) -> Result<CyclicCode, FileError> {
        match (&self.defining_set, &self.generator) {
            (Some(d), None) => {
                if self.n == 0 {
                    return Err(crate::error::CodeError::ZeroLength.into());
                }
                let d = DefiningSet::from_signed(self.n, d.iter().copied())?;
                Ok(CyclicCode::from_defining_set(self.q, self.n, &d)?)
            }
            (None, Some(g)) => Ok(CyclicCode::from_generator(self.q, self.n, g)?),
            _ => Err(FileError::AmbiguousCode),
        }
    }

    /// Describes `code` by its (reduced) defining set.
    pub fn from_code(code: &CyclicCode, name: Option<String>) -> Self {
        CodeSpecFile {
            name,
            q: code.q(),
            n: code.length(),
            defining_set: Some(code.defining_set().iter().map(|x| x as i64).collect()),
            generator: None,
        }
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("q{}n{}", self.q, self.n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    #[serde(flatten)]
    pub certificate: BoundCertificate,
    pub code_a: CodeSpecFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code_b: Option<CodeSpecFile>,
}

/// A certificate file after parsing and code construction.
#[derive(Clone, Debug)]
pub struct LoadedCertificate {
    pub certificate: BoundCertificate,
    pub code_a: CyclicCode,
    pub code_b: Option<CyclicCode>,
    /// Set in lax mode when verification failed.
    pub warning: Option<String>,
}

impl CertificateFile {
    pub fn new(certificate: BoundCertificate, a: &CodeSpecFile, b: Option<&CodeSpecFile>) -> Self {
        CertificateFile {
            certificate,
            code_a: a.clone(),
            code_b: b.cloned(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FileError> {
        toml::from_str(text).map_err(|e| FileError::Parse(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plain data serializes")
    }

    /// Builds the codes and verifies the certificate. In strict mode a
    /// failed verification is an error; otherwise it becomes a warning.
    pub fn load(&self, strict: bool) -> Result<LoadedCertificate, FileError> {
        let a = self.code_a.to_code()?;
        let b = self.code_b.as_ref().map(|b| b.to_code()).transpose()?;
        let warning = match verify_certificate(&self.certificate, &a, b.as_ref()) {
            Verdict::Valid => None,
            Verdict::Rejected(reason) if strict => return Err(FileError::Unverified(reason)),
            Verdict::Rejected(reason) => Some(reason),
        };
        Ok(LoadedCertificate {
            certificate: self.certificate.clone(),
            code_a: a,
            code_b: b,
            warning,
        })
    }
}
