//! `--config FILE` support. Each `key = value` line becomes `--key=value` on
//! the command line, ahead of the flags actually typed, so typed flags win.

use std::fs;

/// Replaces every `--config PATH` in `args` by the flags the file holds.
pub fn expand(args: Vec<String>) -> Result<Vec<String>, String> {
    let mut out = Vec::with_capacity(args.len());
    let mut from_files = Vec::new();
    let mut iter = args.into_iter();
    while let Some(arg) = iter.next() {
        let path = if arg == "--config" {
            Some(iter.next().ok_or("--config needs a file path")?)
        } else {
            arg.strip_prefix("--config=").map(str::to_string)
        };
        match path {
            Some(p) => {
                let text =
                    fs::read_to_string(&p).map_err(|e| format!("cannot read config {p}: {e}"))?;
                from_files.extend(parse(&text).map_err(|e| format!("{p}: {e}"))?);
            }
            None => out.push(arg),
        }
    }
    // typed flags win over the same key from a file
    let key = |a: &str| a.split('=').next().unwrap_or(a).to_string();
    let typed: std::collections::HashSet<String> = out
        .iter()
        .filter(|a| a.starts_with("--"))
        .map(|a| key(a))
        .collect();
    from_files.retain(|f| !typed.contains(&key(f)));
    // file flags go right after the subcommand
    let at = out
        .iter()
        .skip(1)
        .position(|a| !a.starts_with('-'))
        .map_or(out.len(), |i| i + 2);
    out.splice(at..at, from_files);
    Ok(out)
}

fn parse(text: &str) -> Result<Vec<String>, String> {
    let mut flags = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", i + 1))?;
        let key = key.trim().replace('_', "-");
        let value = value.trim();
        if key.is_empty() || key == "config" {
            return Err(format!("line {}: invalid key", i + 1));
        }
        match value {
            "true" => flags.push(format!("--{key}")),
            "false" => {}
            _ => flags.push(format!("--{key}={value}")),
        }
    }
    Ok(flags)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_become_flags() {
        let flags =
            parse("# sweep\np_total = 1e-5\nalpha=1:100:log\nquiet = true\nverbose = false\n")
                .unwrap();
        assert_eq!(
            flags,
            vec!["--p-total=1e-5", "--alpha=1:100:log", "--quiet"]
        );
        assert!(parse("no equals sign").is_err());
    }

    #[test]
    fn typed_flags_override() {
        let file = std::env::temp_dir().join(format!("ace-config-{}", std::process::id()));
        fs::write(&file, "alpha = 5\nlevels = 2\n").unwrap();
        let args = [
            "ace",
            "sweep",
            "--config",
            file.to_str().unwrap(),
            "--alpha=7",
        ]
        .map(String::from)
        .to_vec();
        let out = expand(args).unwrap();
        fs::remove_file(&file).unwrap();
        assert_eq!(out, vec!["ace", "sweep", "--levels=2", "--alpha=7"]);
    }
}
