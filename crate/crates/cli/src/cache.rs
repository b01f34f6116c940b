//! On-disk cache of built ring tables.
//!
//! One file per canonical expression, named by its SHA-256. A file holds a
//! JSON header line followed by the addition and multiplication tables as
//! little-endian `u32`s. Loaded tables are spot-checked before use; a file
//! that fails to load or check is rebuilt and overwritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use idemring::dsl::{build, Expr};
use idemring::{Guards, RingTable};
use serde_json::json;
use sha2::{Digest, Sha256};

const FORMAT: u64 = 1;

/// Elements sampled by the load-time spot check.
const SAMPLE: usize = 64;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn path_for(&self, canonical: &str) -> PathBuf {
        let digest = Sha256::digest(canonical.as_bytes());
        let name: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{name}.ring"))
    }

    /// The cached table for `expr`, or a fresh build that is then stored.
    pub fn load_or_build(&self, expr: &Expr, guards: &Guards) -> idemring::Result<(RingTable, bool)> {
        let canonical = expr.to_string();
        let path = self.path_for(&canonical);
        if let Some(ring) = load(&path, &canonical) {
            guards.check_pair("cached ring", ring.order())?;
            return Ok((ring, true));
        }
        let ring = build(expr, guards)?;
        if let Err(e) = store(&self.dir, &path, &canonical, &ring) {
            eprintln!("warning: could not write cache entry {}: {e}", path.display());
        }
        Ok((ring, false))
    }
}

fn load(path: &Path, canonical: &str) -> Option<RingTable> {
    let bytes = fs::read(path).ok()?;
    let split = bytes.iter().position(|&b| b == b'\n')?;
    let header: serde_json::Value = serde_json::from_slice(&bytes[..split]).ok()?;
    if header["format"].as_u64()? != FORMAT || header["expr"].as_str()? != canonical {
        return None;
    }
    let order = header["order"].as_u64()? as usize;
    let labels: Vec<String> = serde_json::from_value(header["labels"].clone()).ok()?;
    let body = &bytes[split + 1..];
    if labels.len() != order || body.len() != 2 * order * order * 4 {
        return None;
    }
    let words: Vec<u32> = body
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
        .collect();
    let (add, mul) = words.split_at(order * order);
    let ring = RingTable::from_parts(
        add.to_vec(),
        mul.to_vec(),
        header["zero"].as_u64()? as usize,
        header["one"].as_u64()? as usize,
        labels,
        canonical,
    )
    .ok()?;
    spot_check(&ring).then_some(ring)
}

/// Identity and zero laws on a fixed sample of elements, associativity and
/// distributivity on pairs from it.
fn spot_check(r: &RingTable) -> bool {
    let n = r.order();
    let step = n.div_ceil(SAMPLE).max(1);
    let sample: Vec<usize> = (0..n).step_by(step).collect();
    let (zero, one) = (r.zero(), r.one());
    for (i, &x) in sample.iter().enumerate() {
        if r.mul(one, x) != x || r.mul(x, one) != x || r.mul(zero, x) != zero {
            return false;
        }
        for (j, &y) in sample.iter().enumerate() {
            let z = sample[(i + j) % sample.len()];
            let ok = r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z))
                && r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z))
                && r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z));
            if !ok {
                return false;
            }
        }
    }
    true
}

fn store(dir: &Path, path: &Path, canonical: &str, r: &RingTable) -> std::io::Result<()> {
    let header = json!({
        "format": FORMAT,
        "expr": canonical,
        "order": r.order(),
        "zero": r.zero(),
        "one": r.one(),
        "labels": r.labels(),
    });
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    {
        let mut w = std::io::BufWriter::new(tmp.as_file_mut());
        serde_json::to_writer(&mut w, &header)?;
        w.write_all(b"\n")?;
        for &x in r.add_table().iter().chain(r.mul_table()) {
            w.write_all(&x.to_le_bytes())?;
        }
        w.flush()?;
    }
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use idemring::dsl::parse;

    #[test]
    fn second_load_hits_and_matches() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path()).unwrap();
        let expr = parse("U(2,Z(3))").unwrap();
        let g = Guards::default();
        let (fresh, hit) = cache.load_or_build(&expr, &g).unwrap();
        assert!(!hit);
        let (cached, hit) = cache.load_or_build(&expr, &g).unwrap();
        assert!(hit);
        assert_eq!(fresh.add_table(), cached.add_table());
        assert_eq!(fresh.mul_table(), cached.mul_table());
        assert_eq!(fresh.labels(), cached.labels());
        assert_eq!(cached.provenance(), "U(2,Z(3))");
    }

    #[test]
    fn corrupt_entries_are_rebuilt() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path()).unwrap();
        let expr = parse("Z(6)").unwrap();
        let g = Guards::default();
        cache.load_or_build(&expr, &g).unwrap();
        let path = cache.path_for("Z(6)");
        let mut bytes = fs::read(&path).unwrap();
        let n = bytes.len();
        // Last multiplication entry, 5·5, now claims to be 0.
        bytes[n - 4..].copy_from_slice(&0u32.to_le_bytes());
        fs::write(&path, &bytes).unwrap();
        let (ring, hit) = cache.load_or_build(&expr, &g).unwrap();
        assert!(!hit);
        assert_eq!(ring.mul(5, 5), 1);
    }
}
