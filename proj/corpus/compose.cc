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

-- Fully dependent function composition.
main fun (A : Type 0) (B : A -> Type 0) (C : (x : A) -> B x -> Type 0)
         (f : (x : A) -> (y : B x) -> C x y) (g : (x : A) -> B x) (x : A) => f x (g x);
