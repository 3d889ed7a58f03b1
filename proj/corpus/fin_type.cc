-- Copyright 2026 The ccdefun Authors. All Rights Reserved.
--
-- Licensed under the Apache License, Version 2.0 (the "License");
-- you may not use this file except in compliance with the License.
-- You may obtain a copy of the License at
--
--     http://www.apache.org/licenses/LICENSE-2.0
--
-- Unless required by applicable law or agreed to in writing, software
-- distributed under the License is distributed on an "AS IS" BASIS,
-- WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
-- See the License for the specific language governing permissions and
-- limitations under the License.

-- The Fin family at a concrete index, as a type-level computation.
def Fin : Nat -> Type 1
  := fun (n : Nat) => (F : Nat -> Type 0) -> ((k : Nat) -> F (add k 1)) ->
                      ((k : Nat) -> F k -> F (add k 1)) -> F n;
main Fin (add 1 2);
