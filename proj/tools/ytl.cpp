#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ytl/branching.hpp"
#include "ytl/lr.hpp"
#include "ytl/partitions.hpp"
#include "ytl/tableaux.hpp"

namespace {

using json = nlohmann::ordered_json;
using Rows = std::vector<std::pair<std::string, std::string>>;

// JSON is one object per invocation; TSV is one key<TAB>value row per
// entry, both built from the same computation so they cannot drift.
void print_record(const std::string& format, const json& record, const Rows& rows) {
    if (format == "tsv") {
        for (const auto& [key, value] : rows)
            std::cout << key << '\t' << value << '\n';
    } else {
        std::cout << record.dump() << '\n';
    }
}

// Rows of entries joined by '/', e.g. "1,1/1,2/2,3"; empty rows of the
// skew shape contribute empty segments so the row index stays readable.
std::string render_tableau(const ytl::SkewTableau& t) {
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0)
            out += '/';
        const std::vector<unsigned>& row = t.rows()[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out += ',';
            out += std::to_string(row[c]);
        }
    }
    return out;
}

std::string render_weight(const ytl::Weight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.counts().size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(w.counts()[i]);
    }
    return out;
}

json expansion_json(const ytl::SchurExpansion& e) {
    json obj = json::object();
    for (const auto& [nu, c] : e.terms())
        obj[ytl::to_text(nu)] = c;
    return obj;
}

Rows expansion_rows(const ytl::SchurExpansion& e) {
    Rows rows;
    for (const auto& [nu, c] : e.terms())
        rows.emplace_back(ytl::to_text(nu), std::to_string(c));
    return rows;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorics of the Yokonuma-Temperley-Lieb algebra YTL_{d,n}(u)"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format (default json)")
        ->check(CLI::IsMember({"json", "tsv"}));

    int rc = 0;

    auto* lrcoeff = app.add_subcommand(
        "lrcoeff", "Littlewood-Richardson coefficient c^nu_{lambda,mu}");
    lrcoeff->fallthrough();
    std::string lr_lambda;
    std::string lr_mu;
    std::string lr_nu;
    lrcoeff->add_option("--lambda", lr_lambda, "Partition lambda")->required();
    lrcoeff->add_option("--mu", lr_mu, "Partition mu")->required();
    lrcoeff->add_option("--nu", lr_nu, "Partition nu")->required();
    lrcoeff->callback([&] {
        ytl::Partition lam = ytl::parse_partition(lr_lambda);
        ytl::Partition mu = ytl::parse_partition(lr_mu);
        ytl::Partition nu = ytl::parse_partition(lr_nu);
        ytl::Uint value = ytl::lr_coefficient(lam, mu, nu);
        json record;
        record["op"] = "lrcoeff";
        record["inputs"] = {{"lambda", ytl::to_text(lam)},
                            {"mu", ytl::to_text(mu)},
                            {"nu", ytl::to_text(nu)}};
        record["value"] = value;
        print_record(format, record, {{"value", std::to_string(value)}});
    });

    auto* sprod =
        app.add_subcommand("schur-product", "Expand s_lambda * s_mu in the Schur basis");
    sprod->fallthrough();
    std::string sp_lambda;
    std::string sp_mu;
    sprod->add_option("--lambda", sp_lambda, "Partition lambda")->required();
    sprod->add_option("--mu", sp_mu, "Partition mu")->required();
    sprod->callback([&] {
        ytl::Partition lam = ytl::parse_partition(sp_lambda);
        ytl::Partition mu = ytl::parse_partition(sp_mu);
        ytl::SchurExpansion e = ytl::schur_product(lam, mu);
        json record;
        record["op"] = "schur-product";
        record["inputs"] = {{"lambda", ytl::to_text(lam)}, {"mu", ytl::to_text(mu)}};
        record["value"] = expansion_json(e);
        print_record(format, record, expansion_rows(e));
    });

    auto* restrict_cmd = app.add_subcommand(
        "restrict", "Branching table of a G(d,1,n) irreducible restricted to S_n");
    restrict_cmd->fallthrough();
    std::string restrict_mp;
    restrict_cmd
        ->add_option("mp", restrict_mp,
                     "d-partition: '|'-separated partitions, e.g. \"2,1|1|\"")
        ->required();
    restrict_cmd->callback([&] {
        ytl::Multipartition mp = ytl::parse_multipartition(restrict_mp);
        ytl::BranchingTable table = ytl::restriction_multiplicities(mp);
        json record;
        record["op"] = "restrict";
        record["inputs"] = {{"mp", ytl::to_text(mp)}};
        record["value"] = expansion_json(table.expansion);
        print_record(format, record, expansion_rows(table.expansion));
    });

    auto* classify =
        app.add_subcommand("classify", "Enumerate R(d,n), the YTL_{d,n}(u) irreducible labels");
    classify->fallthrough();
    unsigned cl_d = 0;
    unsigned cl_n = 0;
    bool cl_list = false;
    bool cl_parallel = false;
    classify->add_option("--d", cl_d, "Number of components d >= 1")->required();
    classify->add_option("--n", cl_n, "Number of boxes n >= 3")->required();
    classify->add_flag("--list", cl_list, "List the members");
    classify->add_flag("--parallel", cl_parallel, "Accepted for symmetry; enumeration is cheap");
    classify->callback([&] {
        ytl::ClassificationResult r = ytl::classify_R(cl_d, cl_n);
        json record;
        record["op"] = "classify";
        record["inputs"] = {{"d", cl_d}, {"n", cl_n}};
        json value;
        value["r1"] = r.r1.size();
        value["r2"] = r.r2.size();
        value["total"] = r.r1.size() + r.r2.size();
        Rows rows{{"r1", std::to_string(r.r1.size())},
                  {"r2", std::to_string(r.r2.size())},
                  {"total", std::to_string(r.r1.size() + r.r2.size())}};
        if (cl_list) {
            json members = json::array();
            for (const ytl::Multipartition& mp : r.all()) {
                std::string text = ytl::to_text(mp);
                members.push_back(text);
                rows.emplace_back("member", text);
            }
            value["members"] = members;
        }
        record["value"] = value;
        print_record(format, record, rows);
    });

    auto* dim = app.add_subcommand("dim", "Dimension of YTL_{d,n}(u)");
    dim->fallthrough();
    unsigned dim_d = 0;
    unsigned dim_n = 0;
    std::string method = "both";
    bool dim_parallel = false;
    dim->add_option("--d", dim_d, "Number of components d >= 1")->required();
    dim->add_option("--n", dim_n, "Number of boxes n >= 3")->required();
    dim->add_option("--method", method, "formula, sum, or both (default both)")
        ->check(CLI::IsMember({"formula", "sum", "both"}));
    dim->add_flag("--parallel", dim_parallel, "Parallelize the sum over R(d,n)");
    dim->callback([&] {
        json record;
        record["op"] = "dim";
        record["inputs"] = {{"d", dim_d}, {"n", dim_n}, {"method", method}};
        json value;
        Rows rows;
        std::optional<ytl::Uint> formula;
        std::optional<ytl::Uint> sum;
        if (method != "sum") {
            formula = ytl::ytl_dimension_formula(dim_d, dim_n);
            value["formula"] = *formula;
            rows.emplace_back("formula", std::to_string(*formula));
        }
        if (method != "formula") {
            ytl::Exec exec = dim_parallel ? ytl::Exec::parallel : ytl::Exec::serial;
            sum = ytl::ytl_dimension_sum(dim_d, dim_n, exec);
            value["sum"] = *sum;
            rows.emplace_back("sum", std::to_string(*sum));
        }
        if (method == "both") {
            bool match = *formula == *sum;
            value["match"] = match;
            rows.emplace_back("match", match ? "true" : "false");
            if (!match)
                rc = 3; // the two derivations disagree: internal inconsistency
        }
        record["value"] = value;
        print_record(format, record, rows);
    });

    auto* tab = app.add_subcommand(
        "tableaux", "Semistandard fillings of a skew shape with a given weight");
    tab->fallthrough();
    std::string tb_outer;
    std::string tb_inner;
    std::string tb_weight;
    bool lr_only = false;
    tab->add_option("--outer", tb_outer, "Outer partition")->required();
    tab->add_option("--inner", tb_inner, "Inner partition (default empty)");
    tab->add_option("--weight", tb_weight, "Entry multiplicities, comma-separated")->required();
    tab->add_flag("--lr-only", lr_only, "List only the Littlewood-Richardson fillings");
    tab->callback([&] {
        ytl::SkewShape shape(ytl::parse_partition(tb_outer), ytl::parse_partition(tb_inner));
        ytl::Weight weight = ytl::parse_weight(tb_weight);
        std::vector<ytl::SkewTableau> all = ytl::enumerate_ssyt(shape, weight);
        json record;
        record["op"] = "tableaux";
        record["inputs"] = {{"outer", ytl::to_text(shape.outer())},
                            {"inner", ytl::to_text(shape.inner())},
                            {"weight", render_weight(weight)}};
        json items = json::array();
        Rows rows;
        std::size_t lr_count = 0;
        for (const ytl::SkewTableau& t : all) {
            bool lr = ytl::is_lr_tableau(t);
            if (lr)
                ++lr_count;
            if (lr_only && !lr)
                continue;
            json item;
            item["cells"] = render_tableau(t);
            item["lr"] = lr;
            items.push_back(item);
            rows.emplace_back(lr ? "lr-tableau" : "tableau", render_tableau(t));
        }
        json value;
        value["count"] = all.size();
        value["lr_count"] = lr_count;
        value["tableaux"] = items;
        rows.insert(rows.begin(), {{"count", std::to_string(all.size())},
                                   {"lr_count", std::to_string(lr_count)}});
        record["value"] = value;
        print_record(format, record, rows);
    });

    auto* cstd = app.add_subcommand(
        "count-std", "Number of standard d-tableaux of a d-partition");
    cstd->fallthrough();
    std::string cs_mp;
    cstd->add_option("mp", cs_mp, "d-partition: '|'-separated partitions")->required();
    cstd->callback([&] {
        ytl::Multipartition mp = ytl::parse_multipartition(cs_mp);
        ytl::Uint value = ytl::count_standard_d_tableaux(mp);
        json record;
        record["op"] = "count-std";
        record["inputs"] = {{"mp", ytl::to_text(mp)}};
        record["value"] = value;
        print_record(format, record, {{"value", std::to_string(value)}});
    });

    auto* cat = app.add_subcommand("catalan", "n-th Catalan number");
    cat->fallthrough();
    unsigned cat_n = 0;
    cat->add_option("n", cat_n, "Index n >= 0")->required();
    cat->callback([&] {
        ytl::Uint value = ytl::catalan(cat_n);
        json record;
        record["op"] = "catalan";
        record["inputs"] = {{"n", cat_n}};
        record["value"] = value;
        print_record(format, record, {{"value", std::to_string(value)}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ytl::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ytl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return rc;
}
