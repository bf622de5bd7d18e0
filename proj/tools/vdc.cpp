// Command-line front end for the generalized van der Corput toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "vdc/asym.hpp"
#include "vdc/catalog.hpp"
#include "vdc/disc.hpp"
#include "vdc/hammersley.hpp"
#include "vdc/psi.hpp"
#include "vdc/search.hpp"
#include "vdc/verify.hpp"

using namespace vdc;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitCheckFailure = 4;

/// Output stream honoring --out and VDC_OUTPUT_DIR (applied to relative paths).
struct Out {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Out(const std::string& path) {
        if (path.empty()) return;
        std::string full = path;
        const char* dir = std::getenv("VDC_OUTPUT_DIR");
        if (dir && *dir && path.front() != '/') full = std::string(dir) + "/" + path;
        file.open(full);
        if (!file) throw validation_error("cannot open output file: " + full);
        os = &file;
    }
    std::ostream& operator*() { return *os; }
};

struct PermChoice {
    std::string inline_perm, file, catalog_name;
    int omega_base = 0, id_base = 0, tau_base = 0;

    Permutation resolve(int expect_base = 0) const {
        std::optional<Permutation> p;
        if (!inline_perm.empty()) p = Permutation::parse(inline_perm);
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw validation_error("cannot open permutation file: " + file);
            std::string line;
            if (!std::getline(in, line)) throw validation_error("empty permutation file");
            p = Permutation::parse(line);
        }
        if (!catalog_name.empty()) p = catalog::by_name(catalog_name);
        if (omega_base) p = faure_omega(omega_base);
        if (id_base) p = Permutation::identity(id_base);
        if (tau_base) p = tau(tau_base);
        if (!p) throw validation_error("no permutation given (use --perm/--perm-file/...)");
        if (expect_base && p->base() != expect_base)
            throw validation_error("permutation base " + std::to_string(p->base()) +
                                   " does not match --base " + std::to_string(expect_base));
        return *p;
    }

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--perm", inline_perm, "permutation as comma-separated images");
        cmd->add_option("--perm-file", file, "file with the permutation on its first line");
        cmd->add_option("--catalog", catalog_name, "named permutation (sigma12, sigma36, ...)");
        cmd->add_option("--omega", omega_base, "Faure's omega_b for this base");
        cmd->add_option("--id", id_base, "identity permutation in this base");
        cmd->add_option("--tau", tau_base, "tau_b(k) = b-1-k in this base");
    }
};

struct ScheduleChoice {
    bool swap_faure = false;
    std::string periodic;

    SigmaSequence resolve(Permutation sigma) const {
        if (swap_faure) return SigmaSequence::swapped(std::move(sigma), SwapSchedule::faure_a());
        if (!periodic.empty()) {
            std::vector<bool> pat;
            for (char c : periodic) {
                if (c == ',') continue;
                if (c != '0' && c != '1') throw validation_error("--swap-periodic wants 0/1 bits");
                pat.push_back(c == '1');
            }
            return SigmaSequence::swapped(std::move(sigma), SwapSchedule::periodic(pat));
        }
        return SigmaSequence::constant(std::move(sigma));
    }

    void add_flags(CLI::App* cmd) {
        cmd->add_flag("--swap-faure", swap_faure,
                      "swap schedule Sigma_A: sigma on the Faure block set A, tau.sigma off it");
        cmd->add_option("--swap-periodic", periodic,
                        "periodic membership bits, e.g. 101 (1 = use sigma at that position)");
    }
};

void parse_range(const std::string& s, unsigned long long& lo, unsigned long long& hi) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoull(s);
        return;
    }
    lo = std::stoull(s.substr(0, dots));
    hi = std::stoull(s.substr(dots + 2));
    if (lo > hi) throw validation_error("empty range: " + s);
}

std::string enc_cols(const Enclosure& e) {
    if (e.exact()) return rat_str(e.lo);
    return rat_str(e.lo) + ".." + rat_str(e.hi);
}

void write_svg(std::ostream& os, const PiecewiseAffine& f) {
    // fixed 800x400 viewport, x in [0,1], y in [0, max]
    Rat top = f.max_on_unit().first;
    double ymax = std::max(1e-9, to_double(top));
    auto X = [](double x) { return 40 + x * 720; };
    auto Y = [&](double y) { return 380 - (y / ymax) * 340; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 400\">\n"
       << "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n<polyline fill=\"none\" "
          "stroke=\"black\" stroke-width=\"1.5\" points=\"";
    const auto& ps = f.pieces();
    for (size_t i = 0; i < ps.size(); ++i) {
        double x0 = to_double(ps[i].x0);
        double x1 = i + 1 < ps.size() ? to_double(ps[i + 1].x0) : 1.0;
        double y0 = to_double(ps[i].slope) * x0 + to_double(ps[i].icept);
        double y1 = to_double(ps[i].slope) * x1 + to_double(ps[i].icept);
        os << X(x0) << "," << Y(y0) << " " << X(x1) << "," << Y(y1) << " ";
    }
    os << "\"/>\n</svg>\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized van der Corput sequences: exact discrepancy, "
                 "psi functions, asymptotic constants, permutation search"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap worker threads (0 = hardware)");

    // ---- perm ----------------------------------------------------------
    auto* c_perm = app.add_subcommand("perm", "construct and print permutations");
    PermChoice perm_pc;
    perm_pc.add_flags(c_perm);
    std::string perm_affine, perm_fractional, perm_carlitz, perm_partner, perm_intricate,
        perm_cf, perm_out;
    int perm_shift = 0;
    bool perm_reflect = false;
    c_perm->add_option("--affine", perm_affine, "p,a0,a1");
    c_perm->add_option("--fractional", perm_fractional, "p,a0,a1,a2");
    c_perm->add_option("--carlitz2", perm_carlitz, "p,A0,A1,A2,A3");
    c_perm->add_option("--partner", perm_partner, "p,a0,a1,a2: print partner parameters");
    c_perm->add_option("--intricate", perm_intricate, "second permutation for sigma.tau");
    c_perm->add_option("--cf", perm_cf, "a0,p: print the continued fraction of a0/p");
    c_perm->add_option("--shift", perm_shift, "shift images by a (mod b)");
    c_perm->add_flag("--reflect", perm_reflect, "negate images (mod b)");
    c_perm->add_option("--out", perm_out, "output file (default stdout)");

    // ---- gen -----------------------------------------------------------
    auto* c_gen = app.add_subcommand("gen", "emit sequence points as CSV");
    PermChoice gen_pc;
    gen_pc.add_flags(c_gen);
    ScheduleChoice gen_sched;
    gen_sched.add_flags(c_gen);
    std::string gen_range = "0..31", gen_kron, gen_out;
    int gen_base = 0, gen_digits_cap = 24;
    long gen_golden = 0;
    c_gen->add_option("--base", gen_base, "base (checked against the permutation)");
    c_gen->add_option("--N", gen_range, "index range a..b");
    c_gen->add_option("--kronecker", gen_kron, "rational alpha num/den: emit {n alpha}");
    c_gen->add_option("--golden", gen_golden,
                      "Kronecker with a golden-ratio convergent adequate for N points");
    c_gen->add_option("--digits-cap", gen_digits_cap, "tail digits for enclosure rules");
    c_gen->add_option("--out", gen_out, "output file (default stdout)");

    // ---- disc ----------------------------------------------------------
    auto* c_disc = app.add_subcommand("disc", "exact discrepancy table");
    PermChoice disc_pc;
    disc_pc.add_flags(c_disc);
    ScheduleChoice disc_sched;
    disc_sched.add_flags(c_disc);
    std::string disc_range = "1..32", disc_out;
    int disc_base = 0, disc_digits_cap = 24;
    bool disc_norm = false, disc_float = false;
    c_disc->add_option("--base", disc_base, "base (checked against the permutation)");
    c_disc->add_option("--N", disc_range, "range a..b");
    c_disc->add_flag("--normalized", disc_norm, "divide by N at print time");
    c_disc->add_flag("--float", disc_float, "append float columns (17 significant digits)");
    c_disc->add_option("--digits-cap", disc_digits_cap, "tail digits for enclosure rules");
    c_disc->add_option("--out", disc_out, "output file (default stdout)");

    // ---- psi -----------------------------------------------------------
    auto* c_psi = app.add_subcommand("psi", "piecewise data of psi (or phi) as CSV");
    PermChoice psi_pc;
    psi_pc.add_flags(c_psi);
    std::string psi_kind = "total", psi_svg, psi_out;
    int psi_base = 0, psi_phi_h = -1;
    c_psi->add_option("--base", psi_base, "base (checked against the permutation)");
    c_psi->add_option("--kind", psi_kind, "total | plus | minus")
        ->check(CLI::IsMember({"total", "plus", "minus"}));
    c_psi->add_option("--phi", psi_phi_h, "emit phi_h instead of psi");
    c_psi->add_option("--svg", psi_svg, "also write an 800x400 SVG plot");
    c_psi->add_option("--out", psi_out, "output file (default stdout)");

    // ---- alpha ---------------------------------------------------------
    auto* c_alpha = app.add_subcommand("alpha", "certified asymptotic-constant bracket");
    PermChoice alpha_pc;
    alpha_pc.add_flags(c_alpha);
    std::string alpha_kind = "total", alpha_out;
    int alpha_base = 0, alpha_nmax = 3, alpha_cycles = 2;
    c_alpha->add_option("--base", alpha_base, "base (checked against the permutation)");
    c_alpha->add_option("--n-max", alpha_nmax, "largest n for the F_n/n upper bound");
    c_alpha->add_option("--cycles", alpha_cycles, "max digit-cycle length for the lower bound");
    c_alpha->add_option("--kind", alpha_kind, "total | plus | minus")
        ->check(CLI::IsMember({"total", "plus", "minus"}));
    c_alpha->add_option("--out", alpha_out, "output file (default stdout)");

    // ---- search --------------------------------------------------------
    auto* c_search = app.add_subcommand("search", "pruned-tree search for good permutations");
    std::string search_thr, search_out;
    int search_base = 0;
    long long search_budget = 200000000;
    bool search_nosym = false, search_stage2 = false, search_plus = false;
    c_search->add_option("--base", search_base, "base")->required();
    c_search->add_option("--threshold", search_thr, "keep max psi < num/den")->required();
    c_search->add_flag("--no-symmetry", search_nosym, "do not quotient by shift/reflect");
    c_search->add_flag("--stage2", search_stage2, "rank survivors by (1/2) max F_2");
    c_search->add_flag("--plus", search_plus, "prune on psi^+ instead of psi");
    c_search->add_option("--budget", search_budget, "node budget");
    c_search->add_option("--out", search_out, "output file (default stdout)");

    // ---- hammersley ----------------------------------------------------
    auto* c_ham = app.add_subcommand("hammersley", "2-D star-discrepancy formula vs oracle");
    std::string ham_vec, ham_vec_file, ham_points, ham_out;
    int ham_base = 0, ham_m = 0;
    c_ham->add_option("--base", ham_base, "base")->required();
    c_ham->add_option("--m", ham_m, "digits: b^m points")->required();
    c_ham->add_option("--vec", ham_vec, "comma list of id/tau, or 'itau'");
    c_ham->add_option("--vec-file", ham_vec_file, "file with one permutation per line");
    c_ham->add_option("--points", ham_points, "also write the point set CSV here");
    c_ham->add_option("--out", ham_out, "output file (default stdout)");

    // ---- verify --------------------------------------------------------
    auto* c_verify = app.add_subcommand("verify", "reproduce the published constants");
    std::string verify_profile = "quick", verify_json;
    c_verify->add_option("--profile", verify_profile, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));
    c_verify->add_option("--json", verify_json, "write the machine-readable report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        set_max_threads(threads);
        auto longs = [](const std::string& s) {
            std::vector<long> out;
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
            return out;
        };

        if (*c_perm) {
            Out out(perm_out);
            std::optional<Permutation> p;
            if (!perm_affine.empty()) {
                auto v = longs(perm_affine);
                if (v.size() != 3) throw validation_error("--affine wants p,a0,a1");
                p = affine(v[0], v[1], v[2]);
            } else if (!perm_fractional.empty()) {
                auto v = longs(perm_fractional);
                if (v.size() != 4) throw validation_error("--fractional wants p,a0,a1,a2");
                p = fractional_affine(v[0], v[1], v[2], v[3]);
            } else if (!perm_carlitz.empty()) {
                auto v = longs(perm_carlitz);
                if (v.size() != 5) throw validation_error("--carlitz2 wants p,A0,A1,A2,A3");
                p = carlitz2(v[0], v[1], v[2], v[3], v[4]);
            } else if (!perm_partner.empty()) {
                auto v = longs(perm_partner);
                if (v.size() != 4) throw validation_error("--partner wants p,a0,a1,a2");
                auto pr = carlitz_partner(v[0], v[1], v[2], v[3]);
                *out << "A0=" << pr.A0 << ",A1=" << pr.A1 << ",A2=" << pr.A2 << ",X1=" << pr.X1
                     << ",X2=" << pr.X2 << "\n";
                return 0;
            } else if (!perm_cf.empty()) {
                auto v = longs(perm_cf);
                if (v.size() != 2) throw validation_error("--cf wants a0,p");
                ContinuedFraction cf = continued_fraction(v[0], v[1]);
                *out << "[0";
                for (long q : cf.quotients) *out << ";" << q;
                *out << "] alpha_max=" << cf.alpha_max << "\n";
                return 0;
            } else {
                p = perm_pc.resolve();
            }
            if (!perm_intricate.empty()) p = intricate(*p, Permutation::parse(perm_intricate));
            if (perm_shift) p = shift(*p, perm_shift);
            if (perm_reflect) p = reflect(*p);
            *out << p->str() << "\n";
        } else if (*c_gen) {
            Out out(gen_out);
            unsigned long long lo, hi;
            parse_range(gen_range, lo, hi);
            if (!gen_kron.empty() || gen_golden > 0) {
                Rat alpha = gen_golden > 0 ? golden_ratio_approx(gen_golden)
                                           : parse_rat(gen_kron);
                auto pts = kronecker(alpha, static_cast<long>(hi));
                *out << "n,value_num,value_den\n";
                for (unsigned long long n = std::max(1ull, lo); n <= hi; ++n) {
                    const Rat& x = pts[static_cast<size_t>(n - 1)];
                    *out << n << "," << x.get_num() << "," << x.get_den() << "\n";
                }
                return 0;
            }
            SigmaSequence seq = gen_sched.resolve(gen_pc.resolve(gen_base));
            bool exact = seq.tail_exact() && !gen_sched.swap_faure;
            *out << (exact ? "n,value_num,value_den\n" : "n,lo_num,lo_den,hi_num,hi_den\n");
            for (unsigned long long n = lo; n <= hi; ++n) {
                Enclosure e = point(seq, n, gen_digits_cap);
                if (exact)
                    *out << n << "," << e.lo.get_num() << "," << e.lo.get_den() << "\n";
                else
                    *out << n << "," << e.lo.get_num() << "," << e.lo.get_den() << ","
                         << e.hi.get_num() << "," << e.hi.get_den() << "\n";
            }
        } else if (*c_disc) {
            Out out(disc_out);
            unsigned long long lo, hi;
            parse_range(disc_range, lo, hi);
            if (lo < 1) throw validation_error("disc: N starts at 1");
            SigmaSequence seq = disc_sched.resolve(disc_pc.resolve(disc_base));
            *out << "N,Dplus,Dminus,D,Dstar";
            if (disc_float) *out << ",Dplus_f,Dminus_f,D_f,Dstar_f";
            *out << "\n";
            for (unsigned long long N = lo; N <= hi; ++N) {
                Discrepancies d = exact_discrepancies(seq, N, disc_digits_cap);
                auto show = [&](const Enclosure& e) {
                    if (!disc_norm) return enc_cols(e);
                    Enclosure n_e(Rat(e.lo / static_cast<long>(N)),
                                  Rat(e.hi / static_cast<long>(N)));
                    return enc_cols(n_e);
                };
                *out << N << "," << show(d.dplus) << "," << show(d.dminus) << "," << show(d.d)
                     << "," << show(d.dstar);
                if (disc_float) {
                    double scale = disc_norm ? static_cast<double>(N) : 1.0;
                    for (const Enclosure* e : {&d.dplus, &d.dminus, &d.d, &d.dstar})
                        *out << "," << float17(to_double(e->lo) / scale);
                }
                *out << "\n";
            }
        } else if (*c_psi) {
            Out out(psi_out);
            Permutation p = psi_pc.resolve(psi_base);
            PiecewiseAffine f;
            if (psi_phi_h >= 0) {
                f = phi(p, psi_phi_h);
            } else {
                PsiTriple t = psi(p);
                f = psi_kind == "plus" ? t.plus : psi_kind == "minus" ? t.minus : t.total;
            }
            *out << "x_num,x_den,slope_num,slope_den,intercept_num,intercept_den\n" << f.csv();
            if (!psi_svg.empty()) {
                Out svg(psi_svg);
                write_svg(*svg, f);
            }
        } else if (*c_alpha) {
            Out out(alpha_out);
            Permutation p = alpha_pc.resolve(alpha_base);
            PsiKind kind = alpha_kind == "plus"    ? PsiKind::plus
                           : alpha_kind == "minus" ? PsiKind::minus
                                                   : PsiKind::total;
            AlphaBracket br = alpha_bracket(p, alpha_nmax, alpha_cycles, kind);
            FloatInterval fi = over_log(br.lower, br.upper, p.base());
            std::string cyc;
            for (size_t i = 0; i < br.lower_cycle.size(); ++i)
                cyc += (i ? "|" : "") + std::to_string(br.lower_cycle[i]);
            *out << "base,perm_hash,n,upper_num,upper_den,cycle,lower_num,lower_den,"
                    "s_float_lo,s_float_hi\n";
            *out << p.base() << "," << p.hash() << "," << br.upper_n << ","
                 << br.upper.get_num() << "," << br.upper.get_den() << "," << cyc << ","
                 << br.lower.get_num() << "," << br.lower.get_den() << ","
                 << float17(fi.lo) << "," << float17(fi.hi) << "\n";
        } else if (*c_search) {
            Out out(search_out);
            SearchConfig cfg;
            cfg.base = search_base;
            cfg.threshold = parse_rat(search_thr);
            cfg.symmetry_reduction = !search_nosym;
            cfg.stage2 = search_stage2;
            cfg.use_plus = search_plus;
            cfg.node_budget = search_budget;
            SearchResult res = search(cfg);
            *out << "perm,max_psi_num,max_psi_den,f2_num,f2_den\n";
            for (const auto& sv : res.survivors) {
                *out << sv.perm.str() << "," << sv.max_psi.get_num() << ","
                     << sv.max_psi.get_den() << ",";
                if (sv.f2_half_max)
                    *out << sv.f2_half_max->get_num() << "," << sv.f2_half_max->get_den();
                else
                    *out << ",";
                *out << "\n";
            }
            if (!res.complete) {
                std::cerr << "search: node budget exceeded, result incomplete\n";
                return kExitResource;
            }
        } else if (*c_ham) {
            Out out(ham_out);
            std::vector<Permutation> vec;
            if (ham_vec == "itau") {
                vec = itau_vec(ham_base, ham_m);
            } else if (!ham_vec.empty()) {
                std::stringstream ss(ham_vec);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok == "id") vec.push_back(Permutation::identity(ham_base));
                    else if (tok == "tau") vec.push_back(tau(ham_base));
                    else throw validation_error("--vec entries must be id or tau (or use --vec-file)");
                }
            } else if (!ham_vec_file.empty()) {
                std::ifstream in(ham_vec_file);
                if (!in) throw validation_error("cannot open --vec-file");
                std::string line;
                while (std::getline(in, line))
                    if (!line.empty()) vec.push_back(Permutation::parse(line));
            } else {
                throw validation_error("hammersley: need --vec or --vec-file");
            }
            HammersleySpec spec{ham_base, ham_m, vec};
            Rat term = star_formula_term(spec);
            auto pts = hammersley_points(spec);
            if (!ham_points.empty()) {
                Out pf(ham_points);
                *pf << "x_num,x_den,y_num,y_den\n";
                for (auto& [x, y] : pts)
                    *pf << x.get_num() << "," << x.get_den() << "," << y.get_num() << ","
                        << y.get_den() << "\n";
            }
            Rat star = brute_star_2d(pts);
            Rat cm = star - term;
            cm.canonicalize();
            *out << "term_num,term_den,brute_num,brute_den,c_m_float\n";
            *out << term.get_num() << "," << term.get_den() << "," << star.get_num() << ","
                 << star.get_den() << "," << float17(to_double(cm)) << "\n";
        } else if (*c_verify) {
            verify::Options vo;
            vo.profile = verify_profile == "full" ? verify::Profile::full
                                                  : verify::Profile::quick;
            vo.progress = &std::cout;
            auto results = verify::run(vo);
            std::cout << "\n" << verify::criterion_summary(results);
            if (!verify_json.empty()) {
                Out jf(verify_json);
                *jf << verify::to_json(results) << "\n";
            }
            if (!verify::all_pass(results)) {
                std::cout << "CRITERIA FAILED\n";
                return kExitCheckFailure;
            }
            std::cout << "ALL CRITERIA PASS\n";
        }
        return 0;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
}
