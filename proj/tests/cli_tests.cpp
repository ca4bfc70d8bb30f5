// End-to-end checks of the command-line binary: exit codes, output framing,
// determinism, and reference invocations against the corpus. The binary is
// driven through a shell; nothing links against the library, so these tests
// see exactly what a user sees.
#include <sys/wait.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GERMINV_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string corpus(const std::string& f) {
  return std::string(GERMINV_CORPUS_DIR) + "/" + f;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string drop_elapsed(const std::string& s) {
  std::istringstream in(s);
  std::string out, line;
  while (std::getline(in, line))
    if (line.rfind("elapsed-ms:", 0) != 0) out += line + "\n";
  return out;
}

int failures = 0;

void expect(const std::string& name, bool ok, const RunResult& r) {
  if (ok) {
    std::cout << "ok: " << name << "\n";
    return;
  }
  ++failures;
  std::cout << "FAIL: " << name << "\n  exit " << r.exit_code << ", output:\n"
            << r.output << "\n";
}

}  // namespace

int main() {
  // --- reference values through the full pipeline --------------------------
  {
    RunResult r = run("milnor " + corpus("cusp_n4.germ") + " --f Phi");
    expect("milnor of the curve equation is 2",
           r.exit_code == 0 && contains(r.output, "value: 2"), r);
    expect("output frame: command, digest, payload, elapsed",
           r.output.rfind("command: milnor\n", 0) == 0 &&
               contains(r.output, "\ninput-digest: fnv64:") &&
               contains(r.output, "\npayload:\n") &&
               contains(r.output, "\nelapsed-ms: "),
           r);
    // The digest is 16 lowercase hex digits.
    auto pos = r.output.find("fnv64:") + 6;
    std::string digest = r.output.substr(pos, 17);
    bool hex16 = digest.size() == 17 && digest[16] == '\n';
    for (int i = 0; i < 16 && hex16; ++i)
      hex16 = std::isxdigit(static_cast<unsigned char>(digest[i])) &&
              !std::isupper(static_cast<unsigned char>(digest[i]));
    expect("input digest is 16 hex digits", hex16, r);
  }
  {
    RunResult r = run("mu-br " + corpus("coordinate_plane.germ") +
                      " --f f0 --variety W");
    expect("relative number over the coordinate subspace is 3",
           r.exit_code == 0 && contains(r.output, "value: 3"), r);
  }
  {
    RunResult r = run("le-number " + corpus("brieskorn.germ") +
                      " --phi Phi --f ft --at t=1/5");
    expect("second polar number at t = 1/5 is 126",
           r.exit_code == 0 && contains(r.output, "value: 126") &&
               contains(r.output, "mu-phi: 630") &&
               contains(r.output, "dim-total: 756"),
           r);
  }
  {
    RunResult r0 = run("multiplicity " + corpus("brieskorn.germ") + " --f f0");
    RunResult r1 = run("multiplicity " + corpus("brieskorn.germ") +
                       " --f ft --at t=1/5");
    expect("multiplicity drops from 2 to 1 along the family",
           r0.exit_code == 0 && contains(r0.output, "value: 2") &&
               r1.exit_code == 0 && contains(r1.output, "value: 1"),
           r1);
  }
  {
    RunResult r = run("quasihomog " + corpus("brieskorn.germ") + " --f f0");
    expect("weighted homogeneity with its degree",
           r.exit_code == 0 && contains(r.output, "quasihomogeneous: true") &&
               contains(r.output, "degree: 5"),
           r);
  }

  // --- condition reports ----------------------------------------------------
  {
    RunResult r = run("family-check " + corpus("qh_surface.germ") +
                      " --deform F --variety V");
    expect("surface family: arc refutes 2/3/4, radical and split stay clean",
           r.exit_code == 0 && contains(r.output, "condition-1: holds") &&
               contains(r.output, "condition-2: refuted-with-witness") &&
               contains(r.output, "condition-2-witness-arc: gamma") &&
               contains(r.output, "condition-4: refuted-with-witness") &&
               contains(r.output, "condition-5: holds") &&
               contains(r.output, "witness-power: 2") &&
               contains(r.output, "condition-6: holds") &&
               contains(r.output, "strict: fails") &&
               contains(r.output, "weak: fails"),
           r);
  }
  {
    RunResult r = run("arc-test " + corpus("cusp_rescale.germ") +
                      " --deform F --variety V --arc alpha");
    expect("arc test shows the exact valuations",
           r.exit_code == 0 && contains(r.output, "h: x^5") &&
               contains(r.output, "h-valuation: 5") &&
               contains(r.output, "- >=50") &&
               contains(r.output, "strict: fails") &&
               contains(r.output, "weak: holds"),
           r);
  }
  {
    RunResult r = run("split-check " + corpus("coordinate_plane.germ") +
                      " --deform F --variety W --t0 1/2 --points "
                      "\"(-1/4,0,0,0)\"");
    expect("split check accounts for the moved critical point",
           r.exit_code == 0 && contains(r.output, "base-value: 3") &&
               contains(r.output, "local-at-origin: 1") &&
               contains(r.output, "split: true") &&
               contains(r.output, "accounted-sum: 2") &&
               contains(r.output, "conserved: false"),
           r);
  }

  // --- formats and determinism ----------------------------------------------
  {
    RunResult r = run("mu-br " + corpus("coordinate_plane.germ") +
                      " --f f0 --variety W --format json");
    expect("json format carries the same record",
           r.exit_code == 0 && contains(r.output, "\"command\": \"mu-br\"") &&
               contains(r.output, "\"value\": 3") &&
               contains(r.output, "\"input-digest\": \"fnv64:"),
           r);
  }
  {
    RunResult a = run("family-check " + corpus("qh_surface.germ") +
                      " --deform F --variety V");
    RunResult b = run("family-check " + corpus("qh_surface.germ") +
                      " --deform F --variety V");
    bool same = a.exit_code == 0 && b.exit_code == 0 &&
                drop_elapsed(a.output) == drop_elapsed(b.output) &&
                drop_elapsed(a.output) != a.output;
    expect("reruns are byte-identical apart from elapsed-ms",
           same, a);
  }

  // --- the error taxonomy, one exit code at a time --------------------------
  {
    RunResult r = run("milnor " + corpus("cusp_n4.germ") + " --f nosuch");
    expect("unknown name: exit 1",
           r.exit_code == 1 && contains(r.output, "usage error:") &&
               contains(r.output, "unknown name 'nosuch'"),
           r);
  }
  {
    RunResult r = run("milnor " + corpus("cusp_n4.germ") + " --f F");
    expect("deformation without --at: exit 1",
           r.exit_code == 1 &&
               contains(r.output, "'F' is a deformation; give --at t=VALUE"),
           r);
  }
  {
    RunResult r = run("milnor " + corpus("cusp_n4.germ") + " --f Phi --at t=1");
    expect("--at next to a plain polynomial: exit 1",
           r.exit_code == 1 &&
               contains(r.output,
                        "--at applies only when --f names a deformation"),
           r);
  }
  {
    RunResult r = run("milnor " + corpus("duplicate_name.germ") + " --f P");
    expect("duplicate declaration: exit 2 with the position",
           r.exit_code == 2 && contains(r.output, "parse error:") &&
               contains(r.output, "duplicate name 'P' at 4:5"),
           r);
  }
  {
    RunResult r = run("milnor " + corpus("deferred_param.germ") + " --f P");
    expect("deferred parameter blocks the object: exit 3",
           r.exit_code == 3 &&
               contains(r.output, "uninstantiated parameter 'c'"),
           r);
    RunResult q = run("multiplicity " + corpus("deferred_param.germ") + " --f Q");
    expect("objects not touching the parameter still work",
           q.exit_code == 0 && contains(q.output, "value: 2"), q);
    RunResult z = run("multiplicity " + corpus("deferred_param.germ") + " --f zero");
    expect("multiplicity of the zero polynomial: exit 3",
           z.exit_code == 3 &&
               contains(z.output, "multiplicity of the zero polynomial"),
           z);
  }
  {
    RunResult r = run("mu-br " + corpus("swallowtail.germ") +
                      " --f f2 --variety W");
    expect("non-tangent generator: exit 3 naming the pair",
           r.exit_code == 3 &&
               contains(r.output, "vector field generator 1 is not tangent "
                                  "to variety equation 1"),
           r);
  }
  {
    RunResult r = run("mu-br " + corpus("cusp_n4.germ") +
                      " --f f0 --variety V --dim-bound 3");
    expect("dimension cap: exit 4 suggesting a higher bound",
           r.exit_code == 4 && contains(r.output, "bound exceeded:") &&
               contains(r.output, "raise --dim-bound"),
           r);
  }
  {
    RunResult r = run("milnor");
    expect("missing arguments: exit 1", r.exit_code == 1, r);
    RunResult h = run("--help");
    expect("--help exits 0 and lists the commands",
           h.exit_code == 0 && contains(h.output, "family-check"), h);
  }

  if (failures == 0) {
    std::cout << "cli: all checks passed\n";
    return 0;
  }
  std::cout << "cli: " << failures << " check(s) failed\n";
  return 1;
}
