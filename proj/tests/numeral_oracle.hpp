#pragma once

#include <string>

namespace testsupport {

// Standard spelling, written out by hand, independent of the parser's tables.
inline std::string dutch_words(int n) {
  static const char* units[] = {"", "een", "twee", "drie", "vier", "vijf", "zes", "zeven", "acht", "negen"};
  static const char* teens[] = {"tien", "elf", "twaalf", "dertien", "veertien",
                                "vijftien", "zestien", "zeventien", "achttien", "negentien"};
  static const char* tens[] = {"", "", "twintig", "dertig", "veertig", "vijftig", "zestig", "zeventig", "tachtig",
                               "negentig"};
  std::string out;
  if (n >= 100) {
    if (n / 100 > 1) out += units[n / 100];
    out += "honderd";
    n %= 100;
  }
  if (n == 0) return out;
  if (n < 10) return out + units[n];
  if (n < 20) return out + teens[n - 10];
  if (n % 10 == 0) return out + tens[n / 10];
  std::string u = units[n % 10];
  // Trema on the linking "en" after a vowel: tweeentwintig is written twee\xC3\xABntwintig.
  std::string link = u.back() == 'e' ? "\xC3\xABn" : "en";
  return out + u + link + tens[n / 10];
}


}  // namespace testsupport
