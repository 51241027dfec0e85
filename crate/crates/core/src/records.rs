//! Line-oriented report records.
//!
//! A record is one line `kind key:value key:value ...`; values containing
//! whitespace, `:` or `"` are double-quoted. Field order is the insertion order, so
//! output is deterministic.

use std::fmt;

/// One named verification with a short detail string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: String) -> Self {
        Check { name: name.to_string(), passed, detail }
    }

    pub fn record(&self, kind: &str) -> Record {
        Record::new(kind).field("name", &self.name).field("status", status(self.passed)).field("detail", &self.detail)
    }
}

pub fn status(passed: bool) -> &'static str {
    if passed { "pass" } else { "fail" }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    kind: String,
    fields: Vec<(String, String)>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record { kind: kind.to_string(), fields: Vec::new() }
    }

    pub fn field(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

fn quote(v: &str) -> String {
    if !v.is_empty() && !v.contains(|c: char| c.is_whitespace() || c == ':' || c == '"') {
        return v.to_string();
    }
    let mut out = String::from("\"");
    for c in v.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.kind)?;
        for (k, v) in &self.fields {
            write!(f, " {k}:{}", quote(v))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoting() {
        let r = Record::new("hom").field("x", "P1").field("detail", "a b:c").field("range", "-1..2").field("empty", "");
        assert_eq!(r.to_string(), r#"hom x:P1 detail:"a b:c" range:-1..2 empty:"""#);
        assert_eq!(r.get("x"), Some("P1"));
        let c = Check::new("t", false, "say \"hi\"".into());
        assert_eq!(c.record("check").to_string(), r#"check name:t status:fail detail:"say \"hi\"""#);
    }
}
