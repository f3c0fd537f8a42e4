#include "horn/forgetting.hpp"
#include "horn/inference.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

namespace horn {

namespace {

void require_definite(const Formula& f, const char* op) {
    for (const HornClause& c : f.clauses())
        if (!c.is_definite())
            throw InputError(std::string(op) +
                             " requires a definite formula; route negative clauses "
                             "through the general Horn layer");
}

// Depth-first enumeration of body replacements.  One Frame is a live
// body-replacement call; Choices record untried defining clauses, in temporal
// order, so backtracking can revisit decisions inside already-completed
// subcalls.  All state changes between two choice points are written to an
// undo log and reverted when an alternative is retried.
struct Engine {
    const Formula& formula;
    const std::vector<HornClause>& clauses;
    VarSet keep;
    EnumerateOptions options;
    const ClauseSink& sink;
    ForgetStats stats;

    std::unordered_map<VariableId, std::vector<int>, VariableIdHash> defs_of;  // head -> clauses
    std::unordered_map<VariableId, std::vector<int>, VariableIdHash> occurs;   // mention -> clauses
    VarSet reachable;  // unit closure of keep; basis of the pruning test

    std::vector<int> masked_mentions;  // per clause; visible iff zero
    std::set<HornClause> memo;

    struct Frame {
        VarSet target;         // R: the body being replaced
        VarSet deleted;        // D: variables already replaced upstream
        std::vector<VariableId> order;  // R' = R \ D \ keep, in canonical order
        std::size_t pos = 0;
        VarSet body_out;       // S': replacement bodies accumulated so far
        VarSet replaced;       // E': variables replaced by completed subcalls
        VariableId spawn;      // the head variable masked when this frame started

        explicit Frame(VariableId spawn_var) : spawn(spawn_var) {}
    };
    std::vector<Frame> frames;

    struct Choice {
        std::size_t undo_mark;
        std::vector<int> alternatives;
        std::size_t next = 0;
    };
    std::vector<Choice> choices;

    struct UndoMask { VariableId v; };
    struct UndoFrame {};
    struct UndoAdvance { std::size_t frame; std::size_t old_pos; };
    struct UndoMerge {
        std::size_t frame;
        VarSet old_body_out, old_replaced;
        std::size_t old_pos;
        Frame child;
    };
    using Undo = std::variant<UndoMask, UndoFrame, UndoAdvance, UndoMerge>;
    std::vector<Undo> undo_log;

    Engine(const Formula& f, VarSet keep_, const ClauseSink& sink_, EnumerateOptions opt)
        : formula(f), clauses(f.clauses()), keep(std::move(keep_)), options(opt), sink(sink_) {
        masked_mentions.assign(clauses.size(), 0);
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            defs_of[clauses[i].head_var()].push_back(static_cast<int>(i));
            for (VariableId v : clauses[i].vars()) occurs[v].push_back(static_cast<int>(i));
        }
        reachable = unit_closure(f, keep).derived;
    }

    void mask(VariableId v) {
        auto it = occurs.find(v);
        if (it != occurs.end())
            for (int ci : it->second) ++masked_mentions[ci];
    }
    void unmask(VariableId v) {
        auto it = occurs.find(v);
        if (it != occurs.end())
            for (int ci : it->second) --masked_mentions[ci];
    }

    std::vector<int> visible_definitions(VariableId y) const {
        std::vector<int> out;
        auto it = defs_of.find(y);
        if (it == defs_of.end()) return out;
        for (int ci : it->second)
            if (masked_mentions[ci] == 0) out.push_back(ci);
        return out;
    }

    void undo_to(std::size_t mark) {
        while (undo_log.size() > mark) {
            Undo u = std::move(undo_log.back());
            undo_log.pop_back();
            if (auto* m = std::get_if<UndoMask>(&u)) {
                unmask(m->v);
            } else if (std::get_if<UndoFrame>(&u)) {
                frames.pop_back();
            } else if (auto* a = std::get_if<UndoAdvance>(&u)) {
                frames[a->frame].pos = a->old_pos;
            } else if (auto* g = std::get_if<UndoMerge>(&u)) {
                Frame& parent = frames[g->frame];
                parent.body_out = g->old_body_out;
                parent.replaced = g->old_replaced;
                parent.pos = g->old_pos;
                mask(g->child.spawn);
                frames.push_back(std::move(g->child));
            }
        }
    }

    // Starts the body-replacement call for clause `ci`; false on prune failure.
    bool spawn(int ci) {
        const HornClause& c = clauses[ci];
        Frame frame(c.head_var());
        frame.target = c.body();
        if (!frames.empty())
            frame.deleted = set_union(frames.back().deleted, frames.back().replaced);
        VarSet rest = set_difference(set_difference(frame.target, frame.deleted), keep);
        frame.order.assign(rest.begin(), rest.end());

        mask(frame.spawn);
        undo_log.push_back(UndoMask{frame.spawn});
        frames.push_back(std::move(frame));
        undo_log.push_back(UndoFrame{});
        stats.max_frames = std::max(stats.max_frames, frames.size());

        if (options.prune && !frames.back().target.subset_of(reachable)) {
            ++stats.pruned;
            return false;
        }
        return true;
    }

    // S = (R \ D) ∩ keep ∪ S': the clause body a completed frame stands for.
    VarSet frame_result(const Frame& f) const {
        return set_union(
            set_intersection(set_difference(f.target, f.deleted), keep), f.body_out);
    }

    void check_frame_invariant(const Frame& f) const {
        if (!options.check_invariants) return;
        // The bookkeeping guarantee at a successful return: the original
        // formula plus the produced body plus the upstream-deleted variables
        // derive both the original target and everything replaced here.
        ClosureResult cr = unit_closure(formula, set_union(frame_result(f), f.deleted));
        assert(f.target.subset_of(cr.derived));
        assert(f.replaced.subset_of(cr.derived));
        (void)cr;
    }

    // The deepest frame finished: merge it into its parent.
    void merge() {
        Frame child = frames.back();
        check_frame_invariant(child);
        frames.pop_back();
        unmask(child.spawn);
        Frame& parent = frames.back();
        undo_log.push_back(UndoMerge{frames.size() - 1, parent.body_out, parent.replaced,
                                     parent.pos, child});
        parent.body_out = set_union(parent.body_out, frame_result(child));
        parent.replaced = set_union(parent.replaced, child.replaced);
        parent.replaced.insert(child.spawn);
        parent.pos += 1;
    }

    // Emission for a completed root frame; false aborts the whole run.
    bool emit() {
        Frame& root = frames.back();
        check_frame_invariant(root);
        HornClause out(frame_result(root), root.spawn);
        if (options.check_invariants) {
            assert(out.vars().subset_of(keep));
            assert(entails_clause(formula, out));
        }
        if (options.memo_capacity > 0) {
            if (memo.count(out)) {
                ++stats.duplicates_suppressed;
                return true;
            }
            if (memo.size() < options.memo_capacity) memo.insert(out);
        }
        ++stats.emitted;
        return sink(out);
    }

    ForgetStats run() {
        // Root choice: every clause whose head survives.
        Choice root;
        root.undo_mark = 0;
        for (std::size_t i = 0; i < clauses.size(); ++i)
            if (keep.contains(clauses[i].head_var()))
                root.alternatives.push_back(static_cast<int>(i));
        choices.push_back(std::move(root));

        while (!choices.empty()) {
            Choice& choice = choices.back();
            undo_to(choice.undo_mark);
            if (choice.next == choice.alternatives.size()) {
                choices.pop_back();
                continue;
            }
            int ci = choice.alternatives[choice.next++];
            ++stats.branches;
            if (!spawn(ci)) continue;

            // Forward execution until the branch needs a choice, completes,
            // or fails by reaching a variable with no visible definition
            // (which surfaces as an empty choice).
            bool aborted = false;
            while (true) {
                Frame& frame = frames.back();
                if (frame.pos < frame.order.size()) {
                    VariableId y = frame.order[frame.pos];
                    if (frame.deleted.contains(y) || frame.replaced.contains(y)) {
                        undo_log.push_back(UndoAdvance{frames.size() - 1, frame.pos});
                        frame.pos += 1;
                        continue;
                    }
                    choices.push_back(Choice{undo_log.size(), visible_definitions(y), 0});
                    break;
                }
                if (frames.size() == 1) {
                    if (!emit()) aborted = true;
                    break;
                }
                merge();
            }
            if (aborted) break;
        }
        return stats;
    }
};

}  // namespace

ForgetStats enumerate_implicates(const Formula& f, const VarSet& keep, const ClauseSink& sink,
                                 const EnumerateOptions& options) {
    require_definite(f, "implicate enumeration");
    Engine engine(f, keep, sink, options);
    return engine.run();
}

std::pair<Formula, ForgetStats> forget_with_stats(const Formula& f, const VarSet& x,
                                                  const EnumerateOptions& options) {
    VarSet keep = set_difference(f.vars(), x);
    std::set<HornClause> out;
    ForgetStats stats = enumerate_implicates(
        f, keep,
        [&](const HornClause& c) {
            out.insert(c);
            return true;
        },
        options);
    return {Formula(std::vector<HornClause>(out.begin(), out.end())), stats};
}

Formula forget(const Formula& f, const VarSet& x) { return forget_with_stats(f, x).first; }

Formula forget_ce(const Formula& f, const VarSet& x) {
    Formula g = forget(f, x);
    return Formula(std::vector<HornClause>(g.clauses().begin(), g.clauses().end()),
                   set_difference(f.alphabet(), x));
}

// ---------------------------------------------------------------------------
// Single-head specialization
// ---------------------------------------------------------------------------

namespace {

struct SingleHeadWalk {
    const std::vector<HornClause>& clauses;
    const VarSet& keep;
    std::unordered_map<VariableId, int, VariableIdHash> def_of;
    std::unordered_set<VariableId, VariableIdHash> masked;

    bool clause_visible(const HornClause& c) const {
        for (VariableId v : c.body())
            if (masked.count(v)) return false;
        return !masked.count(c.head_var());
    }

    // Replaces the non-kept variables of `target`; false when some variable
    // has no usable definition (the branch fails, nothing is produced).
    bool replace(const VarSet& target, const VarSet& deleted, VarSet& body_out,
                 VarSet& replaced_out) {
        VarSet rest = set_difference(set_difference(target, deleted), keep);
        body_out = set_union(body_out,
                             set_intersection(set_difference(target, deleted), keep));
        for (VariableId y : rest) {
            if (deleted.contains(y) || replaced_out.contains(y)) continue;
            auto it = def_of.find(y);
            if (it == def_of.end()) return false;
            const HornClause& def = clauses[it->second];
            if (!clause_visible(def)) return false;
            masked.insert(y);
            VarSet sub_body, sub_replaced;
            bool ok = replace(def.body(), set_union(deleted, replaced_out), sub_body,
                              sub_replaced);
            masked.erase(y);
            if (!ok) return false;
            body_out = set_union(body_out, sub_body);
            replaced_out = set_union(replaced_out, sub_replaced);
            replaced_out.insert(y);
        }
        return true;
    }
};

}  // namespace

Formula forget_single_head(const Formula& f, const VarSet& x) {
    require_definite(f, "single-head forgetting");
    if (!classify(f).single_head)
        throw InputError("formula is not single-head; use the general forget operation");

    VarSet keep = set_difference(f.vars(), x);
    SingleHeadWalk walk{f.clauses(), keep, {}, {}};
    for (std::size_t i = 0; i < f.clauses().size(); ++i)
        walk.def_of.emplace(f.clauses()[i].head_var(), static_cast<int>(i));

    std::set<HornClause> out;
    for (const HornClause& c : f.clauses()) {
        if (!keep.contains(c.head_var())) continue;
        walk.masked.clear();
        walk.masked.insert(c.head_var());
        VarSet body, replaced;
        if (walk.replace(c.body(), VarSet{}, body, replaced))
            out.insert(HornClause(std::move(body), c.head_var()));
    }
    return Formula(std::vector<HornClause>(out.begin(), out.end()));
}

}  // namespace horn
