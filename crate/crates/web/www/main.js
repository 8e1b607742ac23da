import init, { orbit, grading, real_forms } from "./pkg/spk_web.js";

function show(prefix, json, summarize) {
  const out = document.getElementById(`${prefix}-out`);
  const summary = document.getElementById(`${prefix}-summary`);
  const value = JSON.parse(json);
  if (value.error) {
    summary.textContent = value.error;
    summary.className = "summary error";
    out.textContent = "";
    return;
  }
  summary.className = "summary";
  summary.textContent = summarize(value.payload);
  out.textContent = JSON.stringify(value.payload, null, 2);
}

function bind(prefix, run, summarize) {
  const form = document.getElementById(`${prefix}-form`);
  const go = () => show(prefix, run(), summarize);
  form.addEventListener("submit", (e) => {
    e.preventDefault();
    go();
  });
  go();
}

const value = (id) => document.getElementById(id).value;

await init();

bind("orbit", () => orbit(value("orbit-module")), (p) =>
  `orbit dimension ${p.orbit_dim} in a module of dimension ${p.module_dim}: ` +
  (p.lagrangian ? "Lagrangian" : "not Lagrangian"));

bind("grading", () => grading(value("grading-algebra")), (p) =>
  `degree 0 semisimple part ${p.levi_types.join(" x ") || "trivial"}, ` +
  `${p.pieces["-1"].length}-dimensional degree -1 piece`);

bind("forms", () => real_forms(value("forms-algebra"), value("forms-weight")), (p) =>
  p.real_forms
    .map((f) => {
      const s = f.signature;
      const metric = s && s.h0_compact
        ? ` metric ${s.metric_signatures.map((m) => `(${m[0]},${m[1]})`).join(" or ")}`
        : "";
      return `${f.names.join(" = ")} [index ${f.index}]${metric}`;
    })
    .join("; "));
