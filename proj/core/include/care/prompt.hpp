#pragma once

#include <map>
#include <string>
#include <vector>

namespace care {

struct TaskSpec;

// Placeholder names the template system knows about. A rendered prompt may
// not contain any of these; canonical_hash enforces that.
const std::vector<std::string>& known_placeholders();

// {name} tokens present in a template, in first-appearance order, deduped.
std::vector<std::string> extract_placeholders(const std::string& tmpl);

// Replaces every {name} token with bindings.at(name). Missing binding ->
// TemplateError naming the placeholder. Bindings that match no token are
// ignored; their names are appended to *warnings when provided.
std::string render_prompt(const std::string& tmpl,
                          const std::map<std::string, std::string>& bindings,
                          std::vector<std::string>* warnings = nullptr);

// True if `text` contains any known placeholder token.
bool has_unresolved_placeholder(const std::string& text);

// Default role templates shipped with the harness (versioned; hashes are
// stamped into every run manifest and report).
extern const char* const kTemplateVersion;
const std::map<std::string, std::string>& default_templates();

// Built-in task registry: melanoma_vs_atypical_nevus, edema_vs_pneumonia.
TaskSpec builtin_task(const std::string& task_id);
std::vector<std::string> builtin_task_ids();

}  // namespace care
