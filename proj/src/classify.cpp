#include "refchoice/axioms.hpp"

namespace refchoice {

Classification classify(const ChoiceDataset& data, const CheckOptions& options) {
  Classification c;
  c.ncc = check_ncc(data);
  c.sqa = check_sqa(data);
  c.nre = check_nre(data);
  c.ida = check_ida(data);
  c.rida = check_rida(data);
  c.dora = check_dora(data, options);
  c.dpcra = check_dpcra(data, options);
  c.rdram = c.ncc.passed() && c.sqa.passed() && c.nre.passed();
  c.ira = c.rdram && c.ida.passed() && c.rida.passed();
  c.lra = c.rdram && c.rida.passed() && c.dora.passed();
  c.cra = c.rdram && c.ida.passed() && c.dpcra.passed();
  return c;
}

}  // namespace refchoice
