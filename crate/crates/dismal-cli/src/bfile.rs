//! OEIS b-file handling: parsing, comparison against computed terms, and a
//! minimal fetch client with an on-disk cache. The format is one "index
//! value" pair per line; '#' starts a comment; indices must be consecutive.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub index: u64,
    pub value: String,
}

pub fn parse(text: &str) -> Result<Vec<Entry>, String> {
    let mut entries: Vec<Entry> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (index, value) = match (fields.next(), fields.next(), fields.next()) {
            (Some(i), Some(v), None) => (i, v),
            _ => return Err(format!("malformed b-file line {}: {raw:?}", lineno + 1)),
        };
        let index: u64 = index
            .parse()
            .map_err(|_| format!("malformed b-file index on line {}: {index:?}", lineno + 1))?;
        if !value.bytes().all(|c| c.is_ascii_alphanumeric()) {
            return Err(format!("malformed b-file value on line {}: {value:?}", lineno + 1));
        }
        if let Some(last) = entries.last() {
            if index != last.index + 1 {
                return Err(format!(
                    "index gap in b-file: {} is followed by {index}",
                    last.index
                ));
            }
        }
        entries.push(Entry { index, value: value.to_string() });
    }
    Ok(entries)
}

pub enum Outcome {
    Match(u64),
    Mismatch { index: u64, file: String, computed: String },
}

/// Both slices are indexed runs; computed must lie within the file's span
/// (the caller checks that before doing any work).
pub fn check(entries: &[Entry], computed: &[(u64, String)]) -> Outcome {
    for (index, value) in computed {
        let offset = (index - entries[0].index) as usize;
        let have = &entries[offset];
        debug_assert_eq!(have.index, *index);
        if have.value != *value {
            return Outcome::Mismatch {
                index: *index,
                file: have.value.clone(),
                computed: value.clone(),
            };
        }
    }
    Outcome::Match(computed.len() as u64)
}

fn cache_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("DISMAL_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    if let Ok(home) = std::env::var("HOME") {
        return PathBuf::from(home).join(".cache").join("dismal");
    }
    PathBuf::from(".dismal-cache")
}

/// Resolves an A-number to a local b-file path, downloading into the cache
/// only when `online` is set. Offline with a cold cache is an error.
pub fn fetch(anumber: &str, online: bool) -> Result<PathBuf, String> {
    let digits = anumber.strip_prefix('A').unwrap_or("");
    if digits.len() < 4 || digits.len() > 7 || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(format!("{anumber:?} is not an OEIS A-number"));
    }
    let dir = cache_dir();
    let path = dir.join(format!("{anumber}.txt"));
    if path.exists() {
        return Ok(path);
    }
    if !online {
        return Err(format!(
            "offline: {anumber} is not cached at {}; pass --online to download",
            path.display()
        ));
    }
    fs::create_dir_all(&dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let url = format!("https://oeis.org/{anumber}/b{digits}.txt");
    let status = Command::new("curl")
        .args(["-fsSL", &url, "-o"])
        .arg(&path)
        .status()
        .map_err(|e| format!("cannot run curl: {e}"))?;
    if !status.success() {
        let _ = fs::remove_file(&path);
        return Err(format!("download of {url} failed"));
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_pairs() {
        let text = "# heading\n\n0 0\n1 11\n2 12\n";
        let entries = parse(text).unwrap();
        assert_eq!(entries.len(), 3);
        assert_eq!(entries[2], Entry { index: 2, value: "12".into() });
    }

    #[test]
    fn rejects_malformed_lines_and_gaps() {
        assert!(parse("1 2 3\n").unwrap_err().contains("malformed"));
        assert!(parse("x 2\n").unwrap_err().contains("malformed"));
        assert!(parse("1 -2\n").unwrap_err().contains("malformed"));
        assert!(parse("1 1\n3 1\n").unwrap_err().contains("index gap"));
    }

    #[test]
    fn comparison_reports_first_mismatch() {
        let entries = parse("5 10\n6 11\n7 99\n").unwrap();
        let good = vec![(5, "10".to_string()), (6, "11".to_string())];
        assert!(matches!(check(&entries, &good), Outcome::Match(2)));
        let bad =
            vec![(5, "10".to_string()), (6, "12".to_string()), (7, "99".to_string())];
        match check(&entries, &bad) {
            Outcome::Mismatch { index, file, computed } => {
                assert_eq!((index, file.as_str(), computed.as_str()), (6, "11", "12"));
            }
            Outcome::Match(_) => panic!("expected a mismatch"),
        }
    }

    #[test]
    fn fetch_validates_and_respects_offline() {
        assert!(fetch("B123456", false).is_err());
        assert!(fetch("A12", false).is_err());
        std::env::set_var("DISMAL_CACHE_DIR", std::env::temp_dir().join("dismal-cold"));
        let err = fetch("A000001", false).unwrap_err();
        assert!(err.contains("offline"));
    }
}
