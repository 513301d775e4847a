//! On-disk cache of enumerated balls.
//!
//! A cache file is a text header followed by one record per element:
//!
//! ```text
//! hypgrowth-ball 1
//! spec=free:2
//! radius=2
//! sphere-counts=1,4,12
//! id,word,length,parent
//! 0,,0,-
//! 1,a,1,0
//! ```
//!
//! Records are listed in id order. Loading replays the enumeration and
//! checks every record against it, so a damaged or hand-edited file is
//! refused rather than trusted.

use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::cayley::{BallIndex, Budget};
use crate::error::{Error, Result};
use crate::group::{GroupSpec, Word};

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "hypgrowth-ball";
const RECORD_HEADER: &str = "id,word,length,parent";

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "HYPGROWTH_CACHE";

/// Writes the cache text of an index.
pub fn write_ball(index: &BallIndex, out: &mut impl Write) -> Result<()> {
    if !index.generating_set().is_standard() {
        return Err(Error::input("only balls over the standard generators are cached"));
    }
    let mut header = String::new();
    let _ = writeln!(header, "{MAGIC} {FORMAT_VERSION}");
    let _ = writeln!(header, "spec={}", index.spec());
    let _ = writeln!(header, "radius={}", index.radius());
    let counts: Vec<String> = index.sphere_counts().iter().map(usize::to_string).collect();
    let _ = writeln!(header, "sphere-counts={}", counts.join(","));
    let _ = writeln!(header, "{RECORD_HEADER}");
    out.write_all(header.as_bytes())?;
    let mut line = String::new();
    for (id, word, len, parent) in index.records() {
        line.clear();
        let parent = parent.map_or_else(|| "-".to_string(), |p| p.to_string());
        let _ = writeln!(line, "{id},{word},{len},{parent}");
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}

fn cache_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Cache(format!("line {line}: {msg}"))
}

/// Reads cache text, refusing unknown versions and inconsistent records.
pub fn read_ball(input: impl BufRead) -> Result<BallIndex> {
    let mut lines = input.lines().enumerate();
    let mut next = |want: &str| -> Result<(usize, String)> {
        match lines.next() {
            Some((i, l)) => Ok((i + 1, l?)),
            None => Err(Error::Cache(format!("truncated file: missing {want}"))),
        }
    };
    let (_, magic) = next("header")?;
    let version = magic
        .strip_prefix(MAGIC)
        .map(str::trim)
        .ok_or_else(|| cache_err(1, "not a ball cache file"))?;
    if version != FORMAT_VERSION.to_string() {
        return Err(cache_err(
            1,
            format!("format version {version} is not supported (expected {FORMAT_VERSION})"),
        ));
    }
    let mut field = |key: &str| -> Result<(usize, String)> {
        let (i, l) = next(key)?;
        l.strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .map(|v| (i, v.to_string()))
            .ok_or_else(|| cache_err(i, format!("expected {key}=")))
    };
    let (i, spec_text) = field("spec")?;
    let spec: GroupSpec = spec_text.parse().map_err(|e| cache_err(i, e))?;
    let (i, radius) = field("radius")?;
    let radius: usize = radius.parse().map_err(|_| cache_err(i, "bad radius"))?;
    let (i, counts) = field("sphere-counts")?;
    let counts: Vec<usize> = counts
        .split(',')
        .map(|c| c.parse().map_err(|_| cache_err(i, "bad sphere count")))
        .collect::<Result<_>>()?;
    let (i, rh) = next("record header")?;
    if rh != RECORD_HEADER {
        return Err(cache_err(i, "bad record header"));
    }
    let mut records = Vec::new();
    for (i, line) in lines {
        let line = line?;
        let i = i + 1;
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 4 {
            return Err(cache_err(i, "expected 4 fields"));
        }
        let id: usize = parts[0].parse().map_err(|_| cache_err(i, "bad id"))?;
        if id != records.len() {
            return Err(cache_err(i, format!("id {id} out of order")));
        }
        let word: Word = parts[1].parse().map_err(|e| cache_err(i, e))?;
        let len: usize = parts[2].parse().map_err(|_| cache_err(i, "bad length"))?;
        let parent = match parts[3] {
            "-" => None,
            p => Some(p.parse::<u32>().map_err(|_| cache_err(i, "bad parent"))?),
        };
        records.push((word, len, parent));
    }
    let index = BallIndex::from_records(&spec, radius, records)?;
    if index.sphere_counts() != counts {
        return Err(Error::Cache("sphere counts in header disagree with records".into()));
    }
    Ok(index)
}

/// `cache_store`.
pub fn store(index: &BallIndex, path: &Path) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        write_ball(index, &mut w)?;
        w.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// `cache_load`.
pub fn load(path: &Path) -> Result<BallIndex> {
    read_ball(BufReader::new(fs::File::open(path)?))
}

/// Cache file for a group in a cache directory.
pub fn ball_path(dir: &Path, spec: &GroupSpec) -> PathBuf {
    dir.join(format!("{}.ball", spec.to_string().replace(':', "-")))
}

/// Where a lookup through the cache came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    /// No usable cache; enumerated from scratch.
    Fresh,
    /// Loaded and truncated to the requested radius.
    Hit { cached_radius: usize },
    /// Loaded a smaller ball and extended it.
    Extended { cached_radius: usize },
}

/// Returns `B(radius)` using the cache directory when given: a cached ball
/// at least as large is truncated, a smaller one is extended and written
/// back.
pub fn obtain_ball(
    spec: &GroupSpec,
    radius: usize,
    budget: Budget,
    dir: Option<&Path>,
) -> Result<(BallIndex, CacheOutcome)> {
    let Some(dir) = dir else {
        return Ok((BallIndex::enumerate(spec, radius, budget)?, CacheOutcome::Fresh));
    };
    let path = ball_path(dir, spec);
    if path.exists() {
        let mut index = load(&path)?;
        if index.spec() != spec {
            return Err(Error::Cache(format!("{} holds a different group", path.display())));
        }
        let cached_radius = index.radius();
        if cached_radius >= radius {
            return Ok((index.truncated(radius), CacheOutcome::Hit { cached_radius }));
        }
        index.extend_to(radius, budget)?;
        store(&index, &path)?;
        return Ok((index, CacheOutcome::Extended { cached_radius }));
    }
    let index = BallIndex::enumerate(spec, radius, budget)?;
    store(&index, &path)?;
    Ok((index, CacheOutcome::Fresh))
}
