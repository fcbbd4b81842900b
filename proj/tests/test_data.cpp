#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "sentifuse/data/dataset.hpp"
#include "sentifuse/data/normalize.hpp"

using namespace sentifuse;

namespace {

struct TempFile {
    std::filesystem::path path;
    TempFile(const std::string& name, const std::string& contents) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

LabelMapping simple_mapping() {
    LabelMapping m;
    m.mapping = {{"neg", SentimentLabel::negative},
                 {"neu", SentimentLabel::neutral},
                 {"pos", SentimentLabel::positive}};
    return m;
}

}  // namespace

TEST_CASE("normalize: case, whitespace, url and mention replacement") {
    CHECK(normalize("GREAT   day!!") == "great day!!");
    CHECK(normalize("see http://x.co now") == "see <url> now");
    CHECK(normalize("see https://x.co/path?q=1 now") == "see <url> now");
    CHECK(normalize("ping www.example.com please") == "ping <url> please");
    CHECK(normalize("hey @Bob how are you") == "hey <user> how are you");
    CHECK(normalize("  padded \t out \n ") == "padded out");
    CHECK(normalize("") == "");
    // punctuation and emoticons survive
    CHECK(normalize("Love it :) !!!") == "love it :) !!!");
}

TEST_CASE("normalize is idempotent on random-ish inputs") {
    std::mt19937_64 rng(107);
    const std::vector<std::string> pieces = {"Hello",  "WORLD",          "http://t.co/x",
                                             "@user1", "it's",           ":)",
                                             "   ",    "\tmixed\tCASE!", "www.x.org"};
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        const std::size_t n = rng() % 8;
        for (std::size_t i = 0; i < n; ++i) {
            text += pieces[rng() % pieces.size()];
            text += (rng() % 3 == 0) ? "  " : " ";
        }
        const std::string once = normalize(text);
        CHECK(normalize(once) == once);
    }
}

TEST_CASE("load_dataset: well-formed rows with header") {
    const TempFile file("sf_data_ok.csv",
                        "id,text,label\n"
                        "a,\"Great day, really\",pos\n"
                        "b,not good,neg\n"
                        "c,whatever,neu\n");
    DatasetFormat format;
    format.text_column = "text";
    format.label_column = "label";
    format.id_column = "id";
    const std::vector<TextRecord> records =
        load_dataset(file.path.string(), format, simple_mapping());
    REQUIRE(records.size() == 3);
    CHECK(records[0].id == "a");
    CHECK(records[0].text == "Great day, really");
    CHECK(records[0].normalized == "great day, really");
    CHECK(records[0].label == SentimentLabel::positive);
    CHECK(records[1].label == SentimentLabel::negative);
    CHECK(records[2].label == SentimentLabel::neutral);
}

TEST_CASE("load_dataset: numeric label coding via mapping") {
    const TempFile file("sf_data_num.csv",
                        "text,target\n"
                        "awful day,0\n"
                        "ok day,2\n"
                        "best day,4\n");
    DatasetFormat format;
    format.text_column = "text";
    format.label_column = "target";
    LabelMapping mapping;
    mapping.mapping = {{"0", SentimentLabel::negative},
                       {"2", SentimentLabel::neutral},
                       {"4", SentimentLabel::positive}};
    const auto records = load_dataset(file.path.string(), format, mapping);
    REQUIRE(records.size() == 3);
    CHECK(records[2].label == SentimentLabel::positive);
    // ids synthesized from the data-row index
    CHECK(records[0].id == "0");
    CHECK(records[2].id == "2");
}

TEST_CASE("load_dataset: unmapped label names the token and line") {
    const TempFile file("sf_data_unmapped.csv",
                        "text,label\n"
                        "fine,pos\n"
                        "oops,happy-ish\n");
    DatasetFormat format;
    try {
        load_dataset(file.path.string(), format, simple_mapping());
        FAIL("expected a load error");
    } catch (const Error& e) {
        CHECK(e.category() == ErrorCategory::data);
        CHECK(std::string(e.what()).find("happy-ish") != std::string::npos);
        CHECK(std::string(e.what()).find(":3") != std::string::npos);
    }
}

TEST_CASE("load_dataset: malformed row and duplicate ids fail with line numbers") {
    const TempFile short_row("sf_data_short.csv",
                             "id,text,label\n"
                             "a,hello,pos\n"
                             "b,world\n");
    DatasetFormat format;
    format.id_column = "id";
    CHECK_THROWS_AS(load_dataset(short_row.path.string(), format, simple_mapping()), Error);

    const TempFile dup("sf_data_dup.csv",
                       "id,text,label\n"
                       "a,hello,pos\n"
                       "a,world,neg\n");
    CHECK_THROWS_AS(load_dataset(dup.path.string(), format, simple_mapping()), Error);
}

TEST_CASE("load_dataset: headerless files use column indices, tabs supported") {
    const TempFile file("sf_data_idx.tsv",
                        "pos\tgood stuff\n"
                        "neg\tbad stuff\n");
    DatasetFormat format;
    format.delimiter = '\t';
    format.has_header = false;
    format.text_column = "1";
    format.label_column = "0";
    const auto records = load_dataset(file.path.string(), format, simple_mapping());
    REQUIRE(records.size() == 2);
    CHECK(records[0].text == "good stuff");
    CHECK(records[1].label == SentimentLabel::negative);
}

TEST_CASE("load_dataset: quoted fields keep delimiters and doubled quotes") {
    const TempFile file("sf_data_quotes.csv",
                        "text,label\n"
                        "\"she said \"\"wow\"\", twice\",pos\n");
    DatasetFormat format;
    const auto records = load_dataset(file.path.string(), format, simple_mapping());
    REQUIRE(records.size() == 1);
    CHECK(records[0].text == "she said \"wow\", twice");
}

TEST_CASE("load_dataset: quoted field crossing lines, and unterminated quote") {
    const TempFile multiline("sf_data_multiline.csv",
                             "text,label\n"
                             "\"line one\nline two\",pos\n");
    DatasetFormat format;
    const auto records = load_dataset(multiline.path.string(), format, simple_mapping());
    REQUIRE(records.size() == 1);
    CHECK(records[0].text == "line one\nline two");
    CHECK(records[0].normalized == "line one line two");

    const TempFile unterminated("sf_data_unterminated.csv",
                                "text,label\n"
                                "\"never closed,pos\n");
    CHECK_THROWS_AS(load_dataset(unterminated.path.string(), format, simple_mapping()), Error);
}

TEST_CASE("label mapping file round-trip") {
    const TempFile file("sf_mapping.tsv",
                        "# twitter coding\n"
                        "0\tnegative\n"
                        "2\tneutral\n"
                        "4\tpositive\n");
    const LabelMapping m = load_label_mapping(file.path.string());
    REQUIRE(m.mapping.size() == 3);
    CHECK(m.mapping.at("4") == SentimentLabel::positive);
    CHECK(m.mapping.at("0") == SentimentLabel::negative);
}

TEST_CASE("loading preserves order and is deterministic") {
    std::string contents = "text,label\n";
    for (int i = 0; i < 25; ++i)
        contents += "row number " + std::to_string(i) + ",pos\n";
    const TempFile file("sf_data_order.csv", contents);
    DatasetFormat format;
    const auto a = load_dataset(file.path.string(), format, simple_mapping());
    const auto b = load_dataset(file.path.string(), format, simple_mapping());
    REQUIRE(a.size() == 25);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == std::to_string(i));
        CHECK(a[i].text == b[i].text);
    }
}
