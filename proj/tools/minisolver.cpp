// Self-contained CDCL solver for DIMACS CNF, used as the external solver in
// the SAT cross-check path (file in, model out, SAT-competition exit codes).
//
//   minisolver <input.cnf> [output.model]
//
// Prints "s SATISFIABLE" plus "v ..." model lines, or "s UNSATISFIABLE".
// Exit code 10 = SAT, 20 = UNSAT, 1 = usage or input error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using std::vector;

enum Value : int8_t { kFalse = 0, kTrue = 1, kUndef = 2 };

// lit = var << 1 | sign, var 0-based, sign 1 = negated
inline int make_lit(int var, bool neg) { return var << 1 | static_cast<int>(neg); }
inline int lit_var(int lit) { return lit >> 1; }
inline bool lit_neg(int lit) { return lit & 1; }
inline int lit_not(int lit) { return lit ^ 1; }

struct Clause {
    vector<int> lits;
    double activity = 0.0;
    bool learnt = false;
    bool deleted = false;
};

struct Solver {
    int nvars = 0;
    vector<Clause> clauses;          // problem + learnt clauses
    vector<vector<int>> watches;     // lit -> clause indices watching it
    vector<Value> assign;            // var -> value
    vector<int> level;               // var -> decision level
    vector<int> reason;              // var -> clause index or -1
    vector<int> trail;
    vector<int> trail_lim;           // decision level boundaries
    size_t qhead = 0;

    vector<double> activity;         // var activity (VSIDS)
    double var_inc = 1.0;
    static constexpr double kVarDecay = 1.0 / 0.95;
    double cla_inc = 1.0;
    static constexpr double kClaDecay = 1.0 / 0.999;
    vector<int8_t> polarity;         // saved phase, 1 = assign true
    vector<int8_t> seen;

    // max-heap of variables ordered by activity, with lazy position tracking
    vector<int> heap;
    vector<int> heap_pos;            // var -> index in heap or -1

    int64_t n_conflicts = 0;
    int64_t n_learnts = 0;
    double max_learnts = 0;
    bool ok = true;                  // false once UNSAT at level 0

    Value value_lit(int lit) const {
        Value v = assign[lit_var(lit)];
        if (v == kUndef) return kUndef;
        return (v == kTrue) != lit_neg(lit) ? kTrue : kFalse;
    }
    int decision_level() const { return static_cast<int>(trail_lim.size()); }

    // ---------- variable heap ----------

    bool heap_less(int a, int b) const { return activity[a] < activity[b]; }

    void heap_up(size_t i) {
        int v = heap[i];
        while (i > 0) {
            size_t parent = (i - 1) / 2;
            if (!heap_less(heap[parent], v)) break;
            heap[i] = heap[parent];
            heap_pos[heap[i]] = static_cast<int>(i);
            i = parent;
        }
        heap[i] = v;
        heap_pos[v] = static_cast<int>(i);
    }

    void heap_down(size_t i) {
        int v = heap[i];
        const size_t n = heap.size();
        while (2 * i + 1 < n) {
            size_t child = 2 * i + 1;
            if (child + 1 < n && heap_less(heap[child], heap[child + 1])) ++child;
            if (!heap_less(v, heap[child])) break;
            heap[i] = heap[child];
            heap_pos[heap[i]] = static_cast<int>(i);
            i = child;
        }
        heap[i] = v;
        heap_pos[v] = static_cast<int>(i);
    }

    void heap_insert(int v) {
        if (heap_pos[v] >= 0) return;
        heap.push_back(v);
        heap_pos[v] = static_cast<int>(heap.size()) - 1;
        heap_up(heap.size() - 1);
    }

    int heap_pop() {
        int v = heap[0];
        heap_pos[v] = -1;
        heap[0] = heap.back();
        heap.pop_back();
        if (!heap.empty()) {
            heap_pos[heap[0]] = 0;
            heap_down(0);
        }
        return v;
    }

    void bump_var(int v) {
        activity[v] += var_inc;
        if (activity[v] > 1e100) {
            for (int x = 0; x < nvars; ++x) activity[x] *= 1e-100;
            var_inc *= 1e-100;
        }
        if (heap_pos[v] >= 0) heap_up(heap_pos[v]);
    }

    void bump_clause(Clause& c) {
        c.activity += cla_inc;
        if (c.activity > 1e20) {
            for (auto& cl : clauses)
                if (cl.learnt) cl.activity *= 1e-20;
            cla_inc *= 1e-20;
        }
    }

    // ---------- setup ----------

    void init(int n) {
        nvars = n;
        watches.assign(2 * static_cast<size_t>(n), {});
        assign.assign(n, kUndef);
        level.assign(n, 0);
        reason.assign(n, -1);
        activity.assign(n, 0.0);
        polarity.assign(n, 0);
        seen.assign(n, 0);
        heap_pos.assign(n, -1);
        for (int v = 0; v < n; ++v) heap_insert(v);
    }

    // Deduplicated, tautology-checked input clause. Returns false on conflict.
    bool add_clause(vector<int> lits) {
        if (!ok) return false;
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        vector<int> kept;
        for (size_t i = 0; i < lits.size(); ++i) {
            if (i + 1 < lits.size() && lits[i + 1] == lit_not(lits[i])) return true; // taut
            if (i > 0 && lits[i] == lit_not(lits[i - 1])) return true;
            if (value_lit(lits[i]) == kTrue) return true; // satisfied at level 0
            if (value_lit(lits[i]) != kFalse) kept.push_back(lits[i]);
        }
        if (kept.empty()) { ok = false; return false; }
        if (kept.size() == 1) {
            enqueue(kept[0], -1);
            return ok = (propagate() == -1);
        }
        attach(static_cast<int>(clauses.size()), kept);
        clauses.push_back({std::move(kept), 0.0, false, false});
        return true;
    }

    void attach(int ci, const vector<int>& lits) {
        watches[lits[0]].push_back(ci);
        watches[lits[1]].push_back(ci);
    }

    // ---------- search ----------

    void enqueue(int lit, int from) {
        const int v = lit_var(lit);
        assign[v] = lit_neg(lit) ? kFalse : kTrue;
        level[v] = decision_level();
        reason[v] = from;
        trail.push_back(lit);
    }

    // Returns conflicting clause index or -1.
    int propagate() {
        while (qhead < trail.size()) {
            const int p = trail[qhead++];
            const int false_lit = lit_not(p);
            auto& ws = watches[false_lit];
            size_t i = 0, j = 0;
            while (i < ws.size()) {
                const int ci = ws[i];
                Clause& c = clauses[ci];
                auto& ls = c.lits;
                if (ls[0] == false_lit) std::swap(ls[0], ls[1]);
                // now ls[1] == false_lit
                if (value_lit(ls[0]) == kTrue) { ws[j++] = ci; ++i; continue; }
                bool moved = false;
                for (size_t t = 2; t < ls.size(); ++t) {
                    if (value_lit(ls[t]) != kFalse) {
                        std::swap(ls[1], ls[t]);
                        watches[ls[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) { ++i; continue; }
                ws[j++] = ci; ++i;
                if (value_lit(ls[0]) == kFalse) { // conflict
                    while (i < ws.size()) ws[j++] = ws[i++];
                    ws.resize(j);
                    qhead = trail.size();
                    return ci;
                }
                enqueue(ls[0], ci);
            }
            ws.resize(j);
        }
        return -1;
    }

    void backtrack(int to_level) {
        if (decision_level() <= to_level) return;
        const int bound = trail_lim[to_level];
        for (int i = static_cast<int>(trail.size()) - 1; i >= bound; --i) {
            const int v = lit_var(trail[i]);
            polarity[v] = assign[v] == kTrue ? 1 : 0;
            assign[v] = kUndef;
            heap_insert(v);
        }
        trail.resize(bound);
        trail_lim.resize(to_level);
        qhead = trail.size();
    }

    // First-UIP learning. Fills `learnt` (asserting literal first) and
    // returns the backjump level.
    int analyze(int confl, vector<int>& learnt) {
        learnt.assign(1, 0);
        int path = 0;
        int p = -1;
        int idx = static_cast<int>(trail.size()) - 1;
        do {
            Clause& c = clauses[confl];
            if (c.learnt) bump_clause(c);
            for (size_t j = (p == -1 ? 0 : 1); j < c.lits.size(); ++j) {
                const int q = c.lits[j];
                const int v = lit_var(q);
                if (!seen[v] && level[v] > 0) {
                    seen[v] = 1;
                    bump_var(v);
                    if (level[v] >= decision_level()) ++path;
                    else learnt.push_back(q);
                }
            }
            while (!seen[lit_var(trail[idx])]) --idx;
            p = trail[idx--];
            confl = reason[lit_var(p)];
            seen[lit_var(p)] = 0;
            --path;
        } while (path > 0);
        learnt[0] = lit_not(p);

        int bj_level = 0;
        if (learnt.size() > 1) {
            size_t best = 1;
            for (size_t i = 2; i < learnt.size(); ++i)
                if (level[lit_var(learnt[i])] > level[lit_var(learnt[best])]) best = i;
            std::swap(learnt[1], learnt[best]);
            bj_level = level[lit_var(learnt[1])];
        }
        for (size_t i = 1; i < learnt.size(); ++i) seen[lit_var(learnt[i])] = 0;
        return bj_level;
    }

    bool locked(int ci) const {
        const Clause& c = clauses[ci];
        return value_lit(c.lits[0]) == kTrue && reason[lit_var(c.lits[0])] == ci;
    }

    void reduce_db() {
        vector<int> learnt_ids;
        for (size_t ci = 0; ci < clauses.size(); ++ci)
            if (clauses[ci].learnt && !clauses[ci].deleted && !locked(static_cast<int>(ci)) &&
                clauses[ci].lits.size() > 2)
                learnt_ids.push_back(static_cast<int>(ci));
        std::sort(learnt_ids.begin(), learnt_ids.end(), [&](int a, int b) {
            return clauses[a].activity < clauses[b].activity;
        });
        for (size_t i = 0; i < learnt_ids.size() / 2; ++i) {
            clauses[learnt_ids[i]].deleted = true;
            --n_learnts;
        }
        // rebuild all watch lists; deletion is rare enough for a full sweep
        for (auto& w : watches) w.clear();
        for (size_t ci = 0; ci < clauses.size(); ++ci)
            if (!clauses[ci].deleted) attach(static_cast<int>(ci), clauses[ci].lits);
    }

    int pick_branch_var() {
        while (!heap.empty()) {
            const int v = heap_pop();
            if (assign[v] == kUndef) return v;
        }
        return -1;
    }

    // luby(i) * base conflicts between restarts
    static int64_t luby(int64_t i) {
        int64_t k = 1;
        while ((k << 1) - 1 <= i) k <<= 1;
        while (k > 1) {
            if (i == (k << 1) - 2) break;
            if (i >= k - 1) i -= k - 1;
            k >>= 1;
        }
        return k;
    }

    // ---------- main loop ----------

    bool solve() {
        if (!ok) return false;
        max_learnts = std::max<double>(1000.0, clauses.size() / 3.0);
        int64_t restart_idx = 0;
        int64_t conflicts_until_restart = 100 * luby(restart_idx);
        vector<int> learnt;
        while (true) {
            const int confl = propagate();
            if (confl != -1) {
                ++n_conflicts;
                if (decision_level() == 0) return false;
                const int bj = analyze(confl, learnt);
                backtrack(bj);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    const int ci = static_cast<int>(clauses.size());
                    clauses.push_back({learnt, cla_inc, true, false});
                    attach(ci, clauses[ci].lits);
                    ++n_learnts;
                    enqueue(learnt[0], ci);
                }
                var_inc *= kVarDecay;
                cla_inc *= kClaDecay;
                if (--conflicts_until_restart <= 0) {
                    backtrack(0);
                    conflicts_until_restart = 100 * luby(++restart_idx);
                }
                if (n_learnts >= max_learnts) {
                    reduce_db();
                    max_learnts *= 1.15;
                }
            } else {
                const int v = pick_branch_var();
                if (v == -1) return true; // all assigned, no conflict
                trail_lim.push_back(static_cast<int>(trail.size()));
                enqueue(make_lit(v, polarity[v] == 0), -1);
            }
        }
    }
};

int run(int argc, char** argv) {
    if (argc < 2 || argc > 3) {
        std::cerr << "usage: minisolver <input.cnf> [output.model]\n";
        return 1;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "minisolver: cannot open " << argv[1] << "\n";
        return 1;
    }

    Solver solver;
    int declared_vars = 0;
    bool have_header = false;
    std::string tok;
    int max_var = 0;
    vector<vector<int>> raw_clauses;
    vector<int> current;
    while (in >> tok) {
        if (tok == "c") {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        if (tok == "p") {
            std::string fmt;
            long long declared_clauses;
            if (!(in >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf") {
                std::cerr << "minisolver: bad problem line\n";
                return 1;
            }
            have_header = true;
            continue;
        }
        long long lit;
        try {
            lit = std::stoll(tok);
        } catch (const std::exception&) {
            std::cerr << "minisolver: bad token '" << tok << "'\n";
            return 1;
        }
        if (lit == 0) {
            raw_clauses.push_back(current);
            current.clear();
        } else {
            const int var = static_cast<int>(lit > 0 ? lit : -lit);
            max_var = std::max(max_var, var);
            current.push_back(make_lit(var - 1, lit < 0));
        }
    }
    if (!current.empty()) raw_clauses.push_back(current); // unterminated final clause
    if (!have_header && raw_clauses.empty() && max_var == 0) {
        std::cerr << "minisolver: no header and no clauses\n";
        return 1;
    }

    solver.init(std::max(declared_vars, max_var));
    bool ok = true;
    for (auto& cl : raw_clauses)
        if (!solver.add_clause(std::move(cl))) { ok = false; break; }
    const bool sat = ok && solver.solve();

    std::ostringstream out;
    if (sat) {
        out << "s SATISFIABLE\n";
        out << "v";
        for (int v = 0; v < solver.nvars; ++v)
            out << ' ' << (solver.assign[v] == kTrue ? v + 1 : -(v + 1));
        out << " 0\n";
    } else {
        out << "s UNSATISFIABLE\n";
    }
    std::cout << out.str();
    if (argc == 3) {
        std::ofstream of(argv[2]);
        if (!of) {
            std::cerr << "minisolver: cannot open " << argv[2] << "\n";
            return 1;
        }
        of << out.str();
    }
    return sat ? 10 : 20;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
