#include "fatness/multipoly.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace fatness;

namespace {

struct Run {
    int code;
    std::string out;
};

Run fatcheck(const std::string& args)
{
    std::string cmd = std::string(FATCHECK_BINARY) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe))
        out += buf.data();
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string write_temp(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("usage errors exit 2")
{
    CHECK(fatcheck("").code == 2);
    CHECK(fatcheck("frobnicate").code == 2);
    CHECK(fatcheck("invariant --group U").code == 2);
    CHECK(fatcheck("invariant --group E8 --rank 8 --m 2").code == 2);
    CHECK(fatcheck("roots --coeffs 1,x").code == 2);
    CHECK(fatcheck("check /nonexistent/bundle.txt").code == 2);
    CHECK(fatcheck("reproduce no-such-case").code == 2);
    CHECK(fatcheck("oracle --group U --rank 2 --y 1,0 --x 1,2 --k1 4 --k2 2").code == 2);
    CHECK(fatcheck("--help").code == 0);
}

TEST_CASE("invariant records round-trip through the parser")
{
    Run text = fatcheck("invariant --group T --rank 2 --m 2 --orbit 1,1");
    CHECK(text.code == 0);
    CHECK(contains(text.out, "c1^2 + 2*c1*c2 + c2^2"));
    Run rec = fatcheck("invariant --group T --rank 2 --m 2 --orbit 1,1 --format records");
    REQUIRE(rec.code == 0);
    MultiPoly p = parse_records(rec.out, 2);
    MultiPoly c1 = MultiPoly::variable(2, 0), c2 = MultiPoly::variable(2, 1);
    CHECK(p == (c1 + c2).pow(2));
    CHECK(to_records(p) == rec.out);

    Run fam = fatcheck("invariant --group U --rank 2 --m 4 --curve rank2 --format records");
    REQUIRE(fam.code == 0);
    MultiPoly f = parse_records(fam.out, 3);
    CHECK(to_records(f) == fam.out);
    CHECK(!f.is_zero());
    CHECK(fatcheck("invariant --group U --rank 2 --m 4 --curve rank2 --orbit 1,1").code == 2);
}

TEST_CASE("check verb")
{
    std::string data = FATCHECK_DATA_DIR;
    Run g2 = fatcheck("check " + data + "/bundles/g2-so4.txt");
    CHECK(g2.code == 1);
    Run good = fatcheck("check " + data + "/bundles/cp2-9-1.txt --domain sphere-complex");
    CHECK(good.code == 0);
    Run bad = fatcheck("check " + data + "/bundles/cp2-9-3.txt --domain sphere-complex");
    CHECK(bad.code == 1);
    std::string file = write_temp("fatcheck_u2.txt", "group = U\nrank = 2\nm = 4\nc1^4 = 16\nc1^2*c2 = 4\nc2^2 = 1\n");
    CHECK(fatcheck("check " + file).code == 1);
    CHECK(fatcheck("check " + file + " --domain nowhere").code == 2);
    std::string missing = write_temp("fatcheck_missing.txt", "group = U\nrank = 2\nm = 4\nc1^4 = 16\n");
    CHECK(fatcheck("check " + missing).code == 2);
}

TEST_CASE("roots verb")
{
    Run none = fatcheck("roots --coeffs 1,0,1");
    CHECK(none.code == 0);
    CHECK(contains(none.out, "distinct roots: 0"));
    Run two = fatcheck("roots --coeffs 1,0,-2 --precision 1/1000000");
    CHECK(two.code == 1);
    CHECK(contains(two.out, "distinct roots: 2"));
    Run half = fatcheck("roots --coeffs 1,0,-2 --domain \"t>=0\"");
    CHECK(contains(half.out, "distinct roots: 1"));
    CHECK(fatcheck("roots --coeffs 0").code == 1);
}

TEST_CASE("reproduce verb")
{
    Run g2 = fatcheck("reproduce g2-so4");
    CHECK(g2.code == 0);
    CHECK(contains(g2.out, "PASS"));
    Run cp4 = fatcheck("reproduce cp4-tangent");
    CHECK(cp4.code == 1);
    CHECK(contains(cp4.out, "proportional to the reference polynomial"));
}

TEST_CASE("oracle verb")
{
    std::string base = "oracle --group U --rank 2 --y 1,0 --x 1,2 --k1 4 --k2 2 --samples 100000 --seed 5";
    Run ok = fatcheck(base);
    CHECK(ok.code == 0);
    Run again = fatcheck(base + " --workers 1");
    CHECK(again.out == ok.out);
    CHECK(fatcheck(base + " --corrupt 11/10").code == 1);
    CHECK(fatcheck("oracle --group SO --rank 2 --y 1,2 --x 2,1 --k1 4 --k2 1 --samples 1000 --seed 1").code == 2);
}
