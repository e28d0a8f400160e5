use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct Versions {
    pub convexham: &'static str,
    pub cli: &'static str,
}

/// Record of one invocation, written next to (never into) the output.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub input_sha256: Option<String>,
    pub seeds: Vec<u64>,
    pub versions: Versions,
    pub wall_ms: u64,
    pub oracle_queries: Option<u64>,
}

impl RunManifest {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            input_sha256: None,
            seeds: Vec::new(),
            versions: Versions {
                convexham: convexham::VERSION,
                cli: env!("CARGO_PKG_VERSION"),
            },
            wall_ms: 0,
            oracle_queries: None,
        }
    }

    pub fn hash_input(&mut self, bytes: &[u8]) {
        let digest = Sha256::digest(bytes);
        self.input_sha256 = Some(digest.iter().map(|b| format!("{b:02x}")).collect());
    }

    pub fn add_queries(&mut self, q: u64) {
        *self.oracle_queries.get_or_insert(0) += q;
    }
}
